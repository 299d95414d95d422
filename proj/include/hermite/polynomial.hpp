#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermite/rational.hpp"

namespace hermite {

// Dense univariate polynomial with exact rational coefficients.  The
// coefficient vector is always trimmed, so the zero polynomial is the empty
// vector and degree() is nullopt for it.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(unsigned degree, const Rational& lead = Rational(1));

  bool is_zero() const { return coeffs_.empty(); }
  std::optional<unsigned> degree() const;
  const Rational& coeff(unsigned j) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& s);

  // p(x+1)
  Polynomial shifted_by_one() const;

  bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& s);
Polynomial operator*(const Rational& s, Polynomial a);

// (Dp)(x) = p'(x)
Polynomial differentiate(const Polynomial& p);

// forward difference (Delta p)(x) = p(x+1) - p(x), iterated `times`
Polynomial forward_difference(const Polynomial& p, unsigned times = 1);

// closed form for Delta^ell p in terms of Stirling numbers of the second
// kind; agrees with the iterated forward difference
Polynomial iterated_difference_closed_form(const Polynomial& p, unsigned ell);

// (Delta - D) p, which drops the degree by two
Polynomial delta_minus_D(const Polynomial& p);

struct PolynomialPair {
  Polynomial first;
  Polynomial second;
};

// Pair recursion seeded from a sequence h_0, h_1, ... of polynomials with
// deg h_k = k and driven by the coefficients a_1, a_2, ...:
//
//   f^1_k = Delta D h_{k+2}
//   g^1_k = Delta h_{k+2} - D h_{k+2}
//   f^{n+1}_k = Delta f^n_{k+1}
//   g^{n+1}_k = g^n_{k+1} - a_n f^n_{k+1}
//
// Requires k + n + 1 < h.size().
PolynomialPair pair_recursion(const std::vector<Polynomial>& h,
                              const std::vector<Rational>& a, unsigned n,
                              unsigned k);

// Closed forms for the same pair (a_0 = 1 by convention):
//
//   f^n_k = Delta^n D h_{k+n+1}
//   g^n_k = Delta h_{k+n+1} - sum_{l=0}^{n-1} a_l Delta^l D h_{k+n+1}
PolynomialPair pair_closed_form(const std::vector<Polynomial>& h,
                                const std::vector<Rational>& a, unsigned n,
                                unsigned k);

// Coefficient-level expansions of the closed forms when h_{k+n+1} is given by
// its coefficient list tau (degree k+n+1).  The first component has degree k,
// the second degree at most k+n.
Polynomial pair_first_coefficients(const Polynomial& tau, unsigned n, unsigned k);
Polynomial pair_second_coefficients(const Polynomial& tau,
                                    const std::vector<Rational>& a, unsigned n,
                                    unsigned k);

// The pair attached to a spectral family (coefficients a_l = G_l, the Gregory
// coefficients).  For n = 0 the pair is (Delta h_{k+1} - D h_{k+1}, D h_{k+1}).
PolynomialPair gregory_pair(const std::vector<Polynomial>& h, unsigned n,
                            unsigned k);

}  // namespace hermite
