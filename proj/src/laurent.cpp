#include "hermite/laurent.hpp"

#include <cassert>
#include <stdexcept>

namespace hermite {

Laurent::Laurent(int lo, std::vector<Rational> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {
  trim();
}

Laurent Laurent::term(int exponent, const Rational& coeff) {
  return Laurent(exponent, {coeff});
}

void Laurent::trim() {
  size_t drop = 0;
  while (drop < coeffs_.size() && coeffs_[drop] == 0) ++drop;
  if (drop > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(drop));
    lo_ += static_cast<int>(drop);
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) lo_ = 0;
}

int Laurent::min_exp() const {
  assert(!coeffs_.empty());
  return lo_;
}

int Laurent::max_exp() const {
  assert(!coeffs_.empty());
  return lo_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational Laurent::coeff(int exponent) const {
  if (coeffs_.empty()) return Rational(0);
  int i = exponent - lo_;
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Laurent Laurent::operator-() const {
  Laurent r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  int lo = std::min(lo_, other.lo_);
  int hi = std::max(max_exp(), other.max_exp());
  std::vector<Rational> out(static_cast<size_t>(hi - lo + 1), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    out[static_cast<size_t>(lo_ - lo) + i] += coeffs_[i];
  for (size_t i = 0; i < other.coeffs_.size(); ++i)
    out[static_cast<size_t>(other.lo_ - lo) + i] += other.coeffs_[i];
  lo_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) { return *this += -other; }

Laurent& Laurent::operator*=(const Laurent& other) {
  if (is_zero() || other.is_zero()) {
    lo_ = 0;
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  lo_ += other.lo_;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Laurent& Laurent::operator*=(const Rational& s) {
  if (s == 0) {
    lo_ = 0;
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Laurent Laurent::substituted(int m) const {
  if (m == 0) throw std::invalid_argument("Laurent::substituted: m must be nonzero");
  Laurent r;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    r += Laurent::term((lo_ + static_cast<int>(i)) * m, coeffs_[i]);
  }
  return r;
}

Rational Laurent::operator()(const Rational& z) const {
  if (z == 0) throw std::invalid_argument("Laurent::operator(): z must be nonzero");
  Rational acc(0);
  // Horner over the stored window, then shift by z^lo
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  Rational zp(1);
  int e = lo_;
  Rational base = e < 0 ? Rational(1) / z : z;
  unsigned a = static_cast<unsigned>(e < 0 ? -e : e);
  zp = rational_pow(base, a);
  return acc * zp;
}

std::string Laurent::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    int e = lo_ + static_cast<int>(i);
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string term;
    if (e == 0) {
      term = hermite::to_string(a);
    } else {
      if (a.get_num() != 1) term += a.get_num().get_str();
      term += var;
      if (e != 1) term += "^" + std::to_string(e);
      if (a.get_den() != 1) term += "/" + a.get_den().get_str();
    }
    out += term;
  }
  return out;
}

Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
Laurent operator*(Laurent a, const Rational& s) { return a *= s; }
Laurent operator*(const Rational& s, Laurent a) { return a *= s; }

LaurentDivision divide(const Laurent& num, const Laurent& den) {
  if (den.is_zero()) throw std::invalid_argument("divide: zero divisor");
  LaurentDivision res;
  if (num.is_zero()) {
    res.exact = true;
    return res;
  }

  // polynomials in w = 1/z: index i holds the coefficient of z^(hi - i)
  int hi_n = num.max_exp(), lo_n = num.min_exp();
  int hi_d = den.max_exp(), lo_d = den.min_exp();
  size_t deg_n = static_cast<size_t>(hi_n - lo_n);
  size_t deg_d = static_cast<size_t>(hi_d - lo_d);

  std::vector<Rational> rem(deg_n + 1);
  for (size_t i = 0; i <= deg_n; ++i) rem[i] = num.coeff(hi_n - static_cast<int>(i));
  std::vector<Rational> dw(deg_d + 1);
  for (size_t i = 0; i <= deg_d; ++i) dw[i] = den.coeff(hi_d - static_cast<int>(i));

  std::vector<Rational> quot;
  if (deg_n >= deg_d) {
    quot.assign(deg_n - deg_d + 1, Rational(0));
    const Rational& lead = dw[deg_d];
    for (size_t i = deg_n + 1; i-- > deg_d;) {
      size_t qi = i - deg_d;
      if (rem[i] == 0) continue;
      Rational f = rem[i] / lead;
      quot[qi] = f;
      for (size_t j = 0; j <= deg_d; ++j) rem[qi + j] -= f * dw[j];
    }
  }

  Laurent q, r;
  for (size_t i = 0; i < quot.size(); ++i)
    if (quot[i] != 0)
      q += Laurent::term((hi_n - hi_d) - static_cast<int>(i), quot[i]);
  for (size_t i = 0; i < rem.size(); ++i)
    if (rem[i] != 0) r += Laurent::term(hi_n - static_cast<int>(i), rem[i]);

  res.quotient = q;
  res.remainder = r;
  res.exact = r.is_zero();
  return res;
}

MatrixSymbol MatrixSymbol::identity() {
  MatrixSymbol m;
  m.e_[0][0] = Laurent::constant(Rational(1));
  m.e_[1][1] = Laurent::constant(Rational(1));
  return m;
}

MatrixSymbol MatrixSymbol::operator*(const MatrixSymbol& other) const {
  MatrixSymbol r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.e_[i][j] = e_[i][0] * other.e_[0][j] + e_[i][1] * other.e_[1][j];
  return r;
}

MatrixSymbol MatrixSymbol::operator+(const MatrixSymbol& other) const {
  MatrixSymbol r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e_[i][j] = e_[i][j] + other.e_[i][j];
  return r;
}

MatrixSymbol MatrixSymbol::operator-(const MatrixSymbol& other) const {
  MatrixSymbol r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e_[i][j] = e_[i][j] - other.e_[i][j];
  return r;
}

MatrixSymbol MatrixSymbol::scaled(const Rational& s) const {
  MatrixSymbol r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e_[i][j] = e_[i][j] * s;
  return r;
}

MatrixSymbol MatrixSymbol::substituted(int m) const {
  MatrixSymbol r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r.e_[i][j] = e_[i][j].substituted(m);
  return r;
}

bool MatrixSymbol::is_zero() const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!e_[i][j].is_zero()) return false;
  return true;
}

bool MatrixSymbol::operator==(const MatrixSymbol& other) const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(e_[i][j] == other.e_[i][j])) return false;
  return true;
}

}  // namespace hermite
