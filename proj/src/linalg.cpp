#include "hermite/linalg.hpp"

#include <stdexcept>

namespace hermite {

LinearSolution solve_linear_system(Matrix A, std::vector<Rational> b) {
  if (A.rows() != b.size())
    throw std::invalid_argument("solve_linear_system: shape mismatch");
  const size_t m = A.rows(), n = A.cols();
  std::vector<size_t> original(m);
  for (size_t i = 0; i < m; ++i) original[i] = i;

  LinearSolution sol;
  std::vector<size_t> pivot_col;  // pivot column of elimination row r
  size_t r = 0;
  for (size_t c = 0; c < n && r < m; ++c) {
    size_t p = r;
    while (p < m && A.at(p, c) == 0) ++p;
    if (p == m) continue;
    if (p != r) {
      for (size_t j = c; j < n; ++j) std::swap(A.at(p, j), A.at(r, j));
      std::swap(b[p], b[r]);
      std::swap(original[p], original[r]);
    }
    Rational inv = 1 / A.at(r, c);
    for (size_t j = c; j < n; ++j) A.at(r, j) *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < m; ++i) {
      if (i == r || A.at(i, c) == 0) continue;
      Rational f = A.at(i, c);
      for (size_t j = c; j < n; ++j) A.at(i, j) -= f * A.at(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    sol.pivot_rows.push_back(original[r]);
    ++r;
  }

  for (size_t i = r; i < m; ++i) {
    if (b[i] != 0) {
      sol.consistent = false;
      sol.conflict_row = original[i];
      // report the earliest original equation in conflict
      for (size_t k = i + 1; k < m; ++k)
        if (b[k] != 0 && original[k] < sol.conflict_row) sol.conflict_row = original[k];
      return sol;
    }
  }

  sol.consistent = true;
  sol.particular.assign(n, Rational(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) sol.particular[pivot_col[i]] = b[i];

  std::vector<bool> is_pivot(n, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  for (size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[c] = 1;
    for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -A.at(i, c);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::vector<std::vector<Rational>> nullspace(const Matrix& A) {
  return solve_linear_system(A, std::vector<Rational>(A.rows(), Rational(0))).nullspace;
}

}  // namespace hermite
