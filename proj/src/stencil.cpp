#include "hermite/stencil.hpp"

#include <stdexcept>

#include "hermite/combinatorics.hpp"
#include "hermite/linalg.hpp"

namespace hermite {

HermiteSequence apply_stencil(const StencilOperator& L, const HermiteSequence& c) {
  const MatrixSymbol& s = L.symbol();
  if (s.is_zero() || c.is_zero()) return {};
  int lo = 0, hi = 0;
  bool first = true;
  for (int r = 0; r < 2; ++r)
    for (int col = 0; col < 2; ++col) {
      const Laurent& e = s.at(r, col);
      if (e.is_zero()) continue;
      if (first) {
        lo = e.min_exp();
        hi = e.max_exp();
        first = false;
      } else {
        lo = std::min(lo, e.min_exp());
        hi = std::max(hi, e.max_exp());
      }
    }
  HermiteSequence out;
  for (int k = c.support_min(); k <= c.support_max(); ++k) {
    Vec2 ck = c.at(k);
    if (ck[0] == 0 && ck[1] == 0) continue;
    for (int e = lo; e <= hi; ++e) {
      Matrix2 Le;
      for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) Le(r, col) = s.at(r, col).coeff(e);
      if (Le.is_zero()) continue;
      Vec2 add = Le * ck;
      int j = k + e;
      Vec2 cur = out.at(j);
      cur[0] += add[0];
      cur[1] += add[1];
      out.set(j, cur);
    }
  }
  return out;
}

StencilOperator taylor_operator() {
  MatrixSymbol s;
  s.at(0, 0) = Laurent::term(-1, Rational(1)) - Laurent::constant(Rational(1));
  s.at(0, 1) = Laurent::constant(Rational(-1));
  s.at(1, 1) = Laurent::constant(Rational(1));
  return StencilOperator(std::move(s));
}

Laurent gregory_tail(unsigned n) {
  Laurent delta = Laurent::term(-1, Rational(1)) - Laurent::constant(Rational(1));
  Laurent acc;
  Laurent power = Laurent::constant(Rational(1));
  for (unsigned ell = 0; ell < n; ++ell) {
    acc += gregory(ell) * power;
    power *= delta;
  }
  return -acc;
}

StencilOperator gregory_operator(unsigned n) {
  if (n == 0) throw std::invalid_argument("gregory_operator: order must be positive");
  Laurent delta = Laurent::term(-1, Rational(1)) - Laurent::constant(Rational(1));
  Laurent delta_n = Laurent::constant(Rational(1));
  for (unsigned i = 0; i < n; ++i) delta_n *= delta;
  MatrixSymbol s;
  s.at(0, 1) = delta_n;
  s.at(1, 0) = delta;
  s.at(1, 1) = gregory_tail(n);
  return StencilOperator(std::move(s));
}

StencilOperator difference_operator(const Matrix2& V) {
  Matrix2 inv = V.inverse();  // throws for singular V
  Laurent delta = Laurent::term(-1, Rational(1)) - Laurent::constant(Rational(1));
  MatrixSymbol s;
  s.at(0, 0) = delta * inv(0, 0);
  s.at(0, 1) = delta * inv(0, 1);
  s.at(1, 0) = Laurent::constant(inv(1, 0));
  s.at(1, 1) = Laurent::constant(inv(1, 1));
  return StencilOperator(std::move(s));
}

Matrix2 generator_matrix(unsigned n) {
  Matrix2 V;
  if (n == 0) {
    V(0, 1) = 1;
    V(1, 0) = 1;
  } else {
    V(0, 0) = 1;
    V(1, 0) = gregory(n);
    V(1, 1) = 1;
  }
  return V;
}

std::vector<Vec2> eigenspace(const MatrixMask& A) {
  if (A.is_zero()) {
    // every vector is annihilated, none is reproduced
    return {};
  }
  const std::int64_t dil = A.dilation();
  std::vector<Matrix2> sums(static_cast<size_t>(dil));
  for (int j = A.support_min(); j <= A.support_max(); ++j) {
    std::int64_t eps = ((j % dil) + dil) % dil;
    sums[static_cast<size_t>(eps)] = sums[static_cast<size_t>(eps)] + A.at(j);
  }
  Matrix M(static_cast<size_t>(2 * dil), 2);
  for (std::int64_t eps = 0; eps < dil; ++eps) {
    Matrix2 diff = sums[static_cast<size_t>(eps)] - Matrix2::identity();
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        M.at(static_cast<size_t>(2 * eps + r), static_cast<size_t>(c)) = diff(r, c);
  }
  auto basis = nullspace(M);
  std::vector<Vec2> out;
  for (auto& v : basis) {
    Vec2 w;
    w[0] = v[0];
    w[1] = v[1];
    out.push_back(w);
  }
  return out;
}

bool same_span(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
  auto contains = [](const std::vector<Vec2>& basis, const Vec2& v) {
    Matrix M(2, basis.size());
    for (size_t j = 0; j < basis.size(); ++j) {
      M.at(0, j) = basis[j][0];
      M.at(1, j) = basis[j][1];
    }
    auto sol = solve_linear_system(M, {v[0], v[1]});
    return sol.consistent;
  };
  for (const auto& v : b)
    if (!contains(a, v)) return false;
  for (const auto& v : a)
    if (!contains(b, v)) return false;
  return true;
}

}  // namespace hermite
