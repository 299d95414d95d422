#include <doctest.h>

#include <random>

#include "hermite/combinatorics.hpp"
#include "hermite/polynomial.hpp"

using namespace hermite;

namespace {

std::vector<Polynomial> monomial_family(unsigned top) {
  // h_k = x^k / k!
  std::vector<Polynomial> h;
  for (unsigned k = 0; k <= top; ++k)
    h.push_back(Polynomial::monomial(k, Rational(1) / Rational(factorial(k))));
  return h;
}

Polynomial random_polynomial(std::mt19937& rng, unsigned degree) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::vector<Rational> c(degree + 1);
  for (auto& x : c) x = make_rational(num(rng), den(rng));
  if (c.back() == 0) c.back() = 1;
  return Polynomial(std::move(c));
}

}  // namespace

TEST_SUITE("polynomial") {

TEST_CASE("basic arithmetic and evaluation") {
  Polynomial p({Rational(1), Rational(-2), Rational(3)});  // 3x^2 - 2x + 1
  CHECK(p(Rational(2)) == Rational(9));
  CHECK(p.degree() == 2u);
  CHECK(Polynomial().is_zero());
  CHECK((p - p).is_zero());
  CHECK(!Polynomial().degree().has_value());
  CHECK((p * Rational(0)).is_zero());
  Polynomial q = p + Polynomial::monomial(2, Rational(-3));  // kills the top term
  CHECK(q.degree() == 1u);
}

TEST_CASE("rendering") {
  CHECK(Polynomial().to_string() == "0");
  Polynomial p4({Rational(1, 360), Rational(0), Rational(0), Rational(0), Rational(1, 24)});
  CHECK(p4.to_string() == "x^4/24 + 1/360");
  Polynomial q({Rational(-1), Rational(3, 2)});
  CHECK(q.to_string() == "3x/2 - 1");
}

TEST_CASE("differentiation and forward difference") {
  Polynomial p({Rational(5), Rational(0), Rational(0), Rational(1)});  // x^3 + 5
  CHECK(differentiate(p) == Polynomial({Rational(0), Rational(0), Rational(3)}));
  // Delta x^3 = 3x^2 + 3x + 1
  CHECK(forward_difference(p) == Polynomial({Rational(1), Rational(3), Rational(3)}));
  CHECK(forward_difference(p, 3) == Polynomial::constant(Rational(6)));
  CHECK(forward_difference(p, 4).is_zero());
  CHECK(delta_minus_D(Polynomial::monomial(1)).is_zero());
  // (Delta - D) drops the degree by two
  std::mt19937 rng(7);
  auto dd = delta_minus_D(random_polynomial(rng, 6));
  REQUIRE(dd.degree().has_value());
  CHECK(*dd.degree() == 4u);
}

TEST_CASE("closed form of the iterated difference agrees with iteration") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    unsigned degree = static_cast<unsigned>(rng() % 9);
    Polynomial p = random_polynomial(rng, degree);
    for (unsigned ell = 0; ell <= degree + 2; ++ell)
      CHECK(iterated_difference_closed_form(p, ell) == forward_difference(p, ell));
  }
}

TEST_CASE("pair recursion, closed form and coefficient expansion agree") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 40; ++trial) {
    // random coefficient sequence a_1 .. a_5 and random seeds h_k, deg h_k = k
    std::vector<Rational> a;
    for (int i = 0; i < 5; ++i) a.push_back(make_rational(num(rng), den(rng)));
    std::vector<Polynomial> h;
    for (unsigned k = 0; k <= 8; ++k) h.push_back(random_polynomial(rng, k));
    for (unsigned n = 1; n <= 4; ++n)
      for (unsigned k = 0; k + n + 1 < h.size(); ++k) {
        PolynomialPair rec = pair_recursion(h, a, n, k);
        PolynomialPair cf = pair_closed_form(h, a, n, k);
        CHECK(rec.first == cf.first);
        CHECK(rec.second == cf.second);
        CHECK(cf.first == pair_first_coefficients(h[k + n + 1], n, k));
        CHECK(cf.second == pair_second_coefficients(h[k + n + 1], a, n, k));
      }
  }
}

TEST_CASE("degree bounds of the pair") {
  // for generic coefficients the second component has degree k+n; for the
  // Gregory coefficients it collapses to degree k
  auto h = monomial_family(9);
  for (unsigned n = 1; n <= 4; ++n)
    for (unsigned k = 0; k + n + 1 < h.size(); ++k) {
      PolynomialPair pr = gregory_pair(h, n, k);
      REQUIRE(pr.first.degree().has_value());
      CHECK(*pr.first.degree() == k);
      REQUIRE(pr.second.degree().has_value());
      CHECK(*pr.second.degree() <= k);
    }
}

TEST_CASE("pair of the monomial family at n=1, k=1") {
  auto h = monomial_family(4);
  PolynomialPair pr = gregory_pair(h, 1, 1);
  CHECK(pr.first == Polynomial({Rational(1, 2), Rational(1)}));   // x + 1/2
  CHECK(pr.second == Polynomial({Rational(1, 6), Rational(1, 2)}));  // x/2 + 1/6
}

TEST_CASE("pair at k=0 is the constant pair (1, G_n)") {
  auto h = monomial_family(9);
  for (unsigned n = 1; n <= 6; ++n) {
    PolynomialPair pr = gregory_pair(h, n, 0);
    CHECK(pr.first == Polynomial::constant(Rational(1)));
    CHECK(pr.second == Polynomial::constant(gregory(n)));
  }
}

TEST_CASE("pair at n=0 swaps the roles") {
  auto h = monomial_family(5);
  for (unsigned k = 0; k <= 3; ++k) {
    PolynomialPair pr = gregory_pair(h, 0, k);
    CHECK(pr.first == delta_minus_D(h[k + 1]));
    CHECK(pr.second == differentiate(h[k + 1]));
  }
}

}  // TEST_SUITE
