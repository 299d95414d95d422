#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hermite/rational.hpp"

namespace hermite {

// Dense rational matrix, row major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Rational& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

 private:
  size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct LinearSolution {
  bool consistent = false;
  // valid when consistent: one solution (free variables set to zero) and a
  // basis of the homogeneous solution space
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> nullspace;
  // valid when inconsistent: index (into the original row order) of the first
  // equation that cannot be satisfied, and the rows that were used as pivots
  // before the conflict appeared
  size_t conflict_row = 0;
  std::vector<size_t> pivot_rows;
};

// Exact Gaussian elimination over the rationals.  Pivots are chosen as the
// first row with a nonzero entry in the leftmost remaining column, so results
// are deterministic.
LinearSolution solve_linear_system(Matrix A, std::vector<Rational> b);

// Basis of the kernel of A.
std::vector<std::vector<Rational>> nullspace(const Matrix& A);

}  // namespace hermite
