#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "hermite/laurent.hpp"
#include "hermite/rational.hpp"

namespace hermite {

struct Matrix2 {
  // rows by columns, zero initialized
  std::array<std::array<Rational, 2>, 2> a{};

  Rational& operator()(int i, int j) { return a[i][j]; }
  const Rational& operator()(int i, int j) const { return a[i][j]; }

  static Matrix2 identity();

  Matrix2 operator+(const Matrix2& o) const;
  Matrix2 operator-(const Matrix2& o) const;
  Matrix2 operator*(const Matrix2& o) const;
  Matrix2 scaled(const Rational& s) const;
  bool is_zero() const;
  bool operator==(const Matrix2& o) const { return a == o.a; }

  Rational det() const;
  // inverse; throws std::domain_error when singular
  Matrix2 inverse() const;
};

struct Vec2 {
  std::array<Rational, 2> v{};
  Rational& operator[](int i) { return v[static_cast<size_t>(i)]; }
  const Rational& operator[](int i) const { return v[static_cast<size_t>(i)]; }
  bool operator==(const Vec2& o) const { return v == o.v; }
};

Vec2 operator*(const Matrix2& m, const Vec2& x);

// Finitely supported sequence of 2-vectors (function values and first
// derivatives).  Trimmed; the zero sequence is empty.
class HermiteSequence {
 public:
  HermiteSequence() = default;
  HermiteSequence(int offset, std::vector<Vec2> values);

  bool is_zero() const { return values_.empty(); }
  int support_min() const;  // requires nonzero
  int support_max() const;
  Vec2 at(int j) const;     // zero off support
  void set(int j, const Vec2& v);

  bool operator==(const HermiteSequence& o) const {
    return offset_ == o.offset_ && values_ == o.values_;
  }

 private:
  void trim();
  int offset_ = 0;
  std::vector<Vec2> values_;
};

// Finitely supported matrix mask A = (A_j) together with its dilation factor
// (2 for a subdivision mask, 2^N for an N-fold product).
class MatrixMask {
 public:
  MatrixMask() = default;
  MatrixMask(int offset, std::vector<Matrix2> matrices, std::int64_t dilation = 2);

  bool is_zero() const { return matrices_.empty(); }
  int support_min() const;
  int support_max() const;
  size_t support_size() const { return matrices_.size(); }
  std::int64_t dilation() const { return dilation_; }
  Matrix2 at(int j) const;

  MatrixMask scaled(const Rational& s) const;

  bool operator==(const MatrixMask& o) const {
    return offset_ == o.offset_ && dilation_ == o.dilation_ && matrices_ == o.matrices_;
  }

 private:
  void trim();
  int offset_ = 0;
  std::vector<Matrix2> matrices_;
  std::int64_t dilation_ = 2;
};

// (S_A c)_j = sum_k A_{j - dil k} c_k
HermiteSequence apply_subdivision(const MatrixMask& A, const HermiteSequence& c);

MatrixSymbol symbol(const MatrixMask& A);
MatrixMask mask_from_symbol(const MatrixSymbol& s, std::int64_t dilation = 2);

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IterateLimits {
  // cap on total stored matrices across an iterated product; the default can
  // be overridden by the HERMITE_MAX_SUPPORT environment variable
  size_t max_matrices = 1000000;
};

IterateLimits iterate_limits_from_env();

// A^[N] with A^[1] = A and A^[N+1](z) = A^[N](z) A(z^(2^N)); the dilation of
// the result is 2^N.  Throws ResourceLimitError when the support cap is hit.
MatrixMask iterate_mask(const MatrixMask& A, unsigned N,
                        const IterateLimits& limits = iterate_limits_from_env());

// Exact operator norm of S_A on bounded sequences with the max norm:
// max over residues e mod dilation of the row sums of sum_k |A_{e + dil k}|.
Rational operator_norm(const MatrixMask& A);

struct ContractivityCertificate {
  bool contractive = false;
  unsigned iterations = 0;  // certifying N when contractive, maxN otherwise
  Rational norm;            // || S_A^N || for that N
};

// Smallest N <= maxN with || S_A^N || < 1.
ContractivityCertificate contractivity_certificate(
    const MatrixMask& A, unsigned maxN,
    const IterateLimits& limits = iterate_limits_from_env());

struct RefinedData {
  HermiteSequence values;  // c^[level], attached to abscissae j / 2^level
  unsigned level = 0;
  // window of indices whose computation never touched the zero padding
  int valid_min = 0;
  int valid_max = -1;
  bool valid_empty() const { return valid_min > valid_max; }
};

// level steps of the Hermite refinement c^[n+1] = D^-(n+1) S_A D^n c^[n]
// with D = diag(1, 1/2), starting from data at the integers.
RefinedData hermite_refine(const MatrixMask& A, const HermiteSequence& data,
                           unsigned levels);

}  // namespace hermite
