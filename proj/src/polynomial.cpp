#include "hermite/polynomial.hpp"

#include <stdexcept>

#include "hermite/combinatorics.hpp"

namespace hermite {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(unsigned degree, const Rational& lead) {
  std::vector<Rational> c(degree + 1, Rational(0));
  c[degree] = lead;
  return Polynomial(std::move(c));
}

std::optional<unsigned> Polynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<unsigned>(coeffs_.size() - 1);
}

const Rational& Polynomial::coeff(unsigned j) const {
  static const Rational zero(0);
  if (j >= coeffs_.size()) return zero;
  return coeffs_[j];
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial Polynomial::shifted_by_one() const {
  if (coeffs_.empty()) return {};
  unsigned k = static_cast<unsigned>(coeffs_.size() - 1);
  std::vector<Rational> out(coeffs_.size(), Rational(0));
  for (unsigned m = 0; m <= k; ++m) {
    if (coeffs_[m] == 0) continue;
    for (unsigned j = 0; j <= m; ++j)
      out[j] += coeffs_[m] * Rational(binomial(m, j));
  }
  return Polynomial(std::move(out));
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string term;
    if (i == 0) {
      term = hermite::to_string(a);
    } else {
      if (a.get_num() != 1) term += a.get_num().get_str();
      term += var;
      if (i > 1) term += "^" + std::to_string(i);
      if (a.get_den() != 1) term += "/" + a.get_den().get_str();
    }
    out += term;
  }
  return out;
}

Polynomial differentiate(const Polynomial& p) {
  auto deg = p.degree();
  if (!deg || *deg == 0) return {};
  std::vector<Rational> out(*deg, Rational(0));
  for (unsigned j = 0; j + 1 <= *deg; ++j) out[j] = Rational(j + 1) * p.coeff(j + 1);
  return Polynomial(std::move(out));
}

Polynomial forward_difference(const Polynomial& p, unsigned times) {
  Polynomial cur = p;
  for (unsigned i = 0; i < times; ++i) cur = cur.shifted_by_one() - cur;
  return cur;
}

Polynomial iterated_difference_closed_form(const Polynomial& p, unsigned ell) {
  if (ell == 0) return p;
  auto deg = p.degree();
  if (!deg || ell > *deg) return {};
  unsigned k = *deg;
  Rational lfact(factorial(ell));
  std::vector<Rational> out(k - ell + 1, Rational(0));
  for (unsigned j = 0; j + ell <= k; ++j) {
    Rational sum(0);
    for (unsigned m = j; m <= k; ++m)
      sum += p.coeff(m) * Rational(binomial(m, j)) *
             Rational(stirling_second(m - j, ell));
    out[j] = lfact * sum;
  }
  return Polynomial(std::move(out));
}

Polynomial delta_minus_D(const Polynomial& p) {
  return forward_difference(p) - differentiate(p);
}

PolynomialPair pair_recursion(const std::vector<Polynomial>& h,
                              const std::vector<Rational>& a, unsigned n,
                              unsigned k) {
  if (n == 0) throw std::invalid_argument("pair_recursion: n must be positive");
  if (k + n + 1 >= h.size())
    throw std::out_of_range("pair_recursion: not enough seed polynomials");
  if (a.size() + 1 < n)
    throw std::out_of_range("pair_recursion: not enough coefficients");
  // level 1 pairs for k' = k .. k+n-1
  std::vector<PolynomialPair> level;
  for (unsigned kk = k; kk < k + n; ++kk) {
    PolynomialPair pr;
    pr.first = forward_difference(differentiate(h[kk + 2]));
    pr.second = forward_difference(h[kk + 2]) - differentiate(h[kk + 2]);
    level.push_back(std::move(pr));
  }
  for (unsigned m = 1; m < n; ++m) {
    std::vector<PolynomialPair> next;
    for (size_t i = 0; i + 1 < level.size(); ++i) {
      PolynomialPair pr;
      pr.first = forward_difference(level[i + 1].first);
      pr.second = level[i + 1].second - a[m - 1] * level[i + 1].first;
      next.push_back(std::move(pr));
    }
    level = std::move(next);
  }
  return level.front();
}

PolynomialPair pair_closed_form(const std::vector<Polynomial>& h,
                                const std::vector<Rational>& a, unsigned n,
                                unsigned k) {
  if (n == 0) throw std::invalid_argument("pair_closed_form: n must be positive");
  if (k + n + 1 >= h.size())
    throw std::out_of_range("pair_closed_form: not enough seed polynomials");
  if (a.size() + 1 < n)
    throw std::out_of_range("pair_closed_form: not enough coefficients");
  const Polynomial& hh = h[k + n + 1];
  Polynomial dh = differentiate(hh);
  PolynomialPair pr;
  pr.first = forward_difference(dh, n);
  pr.second = forward_difference(hh);
  Rational a0(1);
  for (unsigned ell = 0; ell < n; ++ell) {
    const Rational& al = ell == 0 ? a0 : a[ell - 1];
    pr.second -= al * forward_difference(dh, ell);
  }
  return pr;
}

Polynomial pair_first_coefficients(const Polynomial& tau, unsigned n, unsigned k) {
  Rational nfact(factorial(n));
  std::vector<Rational> out(k + 1, Rational(0));
  for (unsigned j = 0; j <= k; ++j) {
    Rational sum(0);
    for (unsigned m = j; m <= k + n; ++m)
      sum += Rational(m + 1) * tau.coeff(m + 1) * Rational(binomial(m, j)) *
             Rational(stirling_second(m - j, n));
    out[j] = nfact * sum;
  }
  return Polynomial(std::move(out));
}

Polynomial pair_second_coefficients(const Polynomial& tau,
                                    const std::vector<Rational>& a, unsigned n,
                                    unsigned k) {
  std::vector<Rational> out(k + n + 1, Rational(0));
  Rational a0(1);
  for (unsigned j = 0; j <= k + n; ++j) {
    Rational sum(0);
    for (unsigned m = j; m <= k + n; ++m) {
      Rational inner(0);
      for (unsigned ell = 0; ell < n; ++ell) {
        const Rational& al = ell == 0 ? a0 : a[ell - 1];
        inner += al * Rational(factorial(ell)) *
                 Rational(stirling_second(m - j, ell));
      }
      Rational weight = Rational(1) - Rational(m + 1 - j) * inner;
      sum += Rational(binomial(m + 1, j)) * weight * tau.coeff(m + 1);
    }
    out[j] = sum;
  }
  return Polynomial(std::move(out));
}

PolynomialPair gregory_pair(const std::vector<Polynomial>& h, unsigned n,
                            unsigned k) {
  if (k + n + 1 >= h.size())
    throw std::out_of_range("gregory_pair: not enough seed polynomials");
  if (n == 0) {
    const Polynomial& hh = h[k + 1];
    PolynomialPair pr;
    pr.first = forward_difference(hh) - differentiate(hh);
    pr.second = differentiate(hh);
    return pr;
  }
  std::vector<Rational> a;
  for (unsigned ell = 1; ell <= n; ++ell) a.push_back(gregory(ell));
  return pair_closed_form(h, a, n, k);
}

}  // namespace hermite
