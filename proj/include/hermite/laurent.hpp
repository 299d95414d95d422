#pragma once

#include <string>
#include <vector>

#include "hermite/rational.hpp"

namespace hermite {

// Laurent polynomial in one variable z with exact rational coefficients.
// Stored as a coefficient window [lo, lo + size); kept trimmed on both ends,
// zero is the empty window.
class Laurent {
 public:
  Laurent() = default;
  Laurent(int lo, std::vector<Rational> coeffs);

  static Laurent term(int exponent, const Rational& coeff);
  static Laurent constant(const Rational& c) { return term(0, c); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero
  Rational coeff(int exponent) const;

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& other);
  Laurent& operator-=(const Laurent& other);
  Laurent& operator*=(const Laurent& other);
  Laurent& operator*=(const Rational& s);

  // z -> z^m, m nonzero (m may be negative)
  Laurent substituted(int m) const;

  Rational operator()(const Rational& z) const;  // evaluation, z nonzero

  bool operator==(const Laurent& other) const {
    return lo_ == other.lo_ && coeffs_ == other.coeffs_;
  }

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<Rational> coeffs_;
};

Laurent operator+(Laurent a, const Laurent& b);
Laurent operator-(Laurent a, const Laurent& b);
Laurent operator*(Laurent a, const Laurent& b);
Laurent operator*(Laurent a, const Rational& s);
Laurent operator*(const Rational& s, Laurent a);

struct LaurentDivision {
  bool exact = false;
  Laurent quotient;
  Laurent remainder;
};

// Division num = quotient * den + remainder, performed on the associated
// polynomials in w = 1/z (leading coefficient = most negative z exponent).
// For exact divisions the orientation is irrelevant; the remainder reported
// for inexact ones follows this convention.
LaurentDivision divide(const Laurent& num, const Laurent& den);

// 2x2 matrix of Laurent polynomials.
class MatrixSymbol {
 public:
  MatrixSymbol() = default;

  Laurent& at(int i, int j) { return e_[i][j]; }
  const Laurent& at(int i, int j) const { return e_[i][j]; }

  static MatrixSymbol identity();

  MatrixSymbol operator*(const MatrixSymbol& other) const;
  MatrixSymbol operator+(const MatrixSymbol& other) const;
  MatrixSymbol operator-(const MatrixSymbol& other) const;
  MatrixSymbol scaled(const Rational& s) const;
  MatrixSymbol substituted(int m) const;

  bool is_zero() const;
  bool operator==(const MatrixSymbol& other) const;

 private:
  Laurent e_[2][2];
};

}  // namespace hermite
