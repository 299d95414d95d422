#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "hermite/combinatorics.hpp"
#include "hermite/factorize.hpp"
#include "hermite/schemefile.hpp"
#include "hermite/stencil.hpp"

using namespace hermite;

namespace {

MatrixMask h1_mask(const Rational& theta, const Rational& omega) {
  ParamBinding binding{{"theta", theta}, {"omega", omega}};
  return load_scheme(std::string(HERMITE_SCHEMES_DIR) + "/h1.scheme", binding);
}

Matrix2 m2(const Rational& a, const Rational& b, const Rational& c,
           const Rational& d) {
  Matrix2 m;
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// Order-4 factor of the reference scheme at theta = 1/32, support [-4, 2];
// every entry is an affine function of omega.  Derived once by hand from the
// symbol division and frozen here as an oracle.
MatrixMask golden_order4(const Rational& w) {
  std::vector<Matrix2> ms;
  ms.push_back(m2(0, -24 * w, 0, 0));
  ms.push_back(m2(0, 96 * w + 12, 0, w));
  ms.push_back(m2(-w, -168 * w - 48, 0, -5 * w - Rational(1, 2)));
  ms.push_back(m2(4 * w + Rational(1, 2), 192 * w + 72, w / 24, 20 * w + 3));
  ms.push_back(
      m2(-6 * w - 2, -168 * w - 48, -5 * w / 24 - Rational(1, 48), 4 * w - 2));
  ms.push_back(m2(4 * w + Rational(5, 2), 96 * w + 12,
                  19 * w / 24 + Rational(1, 8), 19 * w + 3));
  ms.push_back(
      m2(-w, -24 * w, 3 * w / 8 - Rational(1, 16), 9 * w + Rational(1, 2)));
  return MatrixMask(-4, ms);
}

// Chain of elementary factor steps that recomputes the fixed-vector space at
// every level and, at exactly one level, completes the generator with an
// alternative second column.
MatrixMask adaptive_chain(const MatrixMask& a, unsigned n, unsigned swap_level) {
  TaylorFactorization t = factorize_taylor(a);
  REQUIRE(t.success());
  MatrixMask cur = *t.mask;
  for (unsigned l = 0; l < n; ++l) {
    std::vector<Vec2> basis = eigenspace(cur);
    REQUIRE(!basis.empty());
    Vec2 v = basis[0];
    Vec2 w;
    if (v[0] == 0)
      w[0] = 1;
    else
      w[1] = 1;
    if (l == swap_level) {
      w[0] += v[0];
      w[1] += v[1];
    }
    Matrix2 g;
    g(0, 0) = v[0];
    g(1, 0) = v[1];
    g(0, 1) = w[0];
    g(1, 1) = w[1];
    StepOutcome step = factor_step(cur, g);
    REQUIRE(step.success());
    cur = *step.mask;
  }
  return cur;
}

}  // namespace

TEST_SUITE_BEGIN("factorize");

TEST_CASE("order-4 factor at theta 1/32 matches the frozen table") {
  for (const Rational& w : {Rational(0), Rational(-1, 10), Rational(-3, 25)}) {
    MatrixMask a = h1_mask(Rational(1, 32), w);
    FactorizeOutcome out = factorize_gregory(a, 4);
    REQUIRE(out.success());
    const MatrixMask& q = out.factorization->quotient();
    MatrixMask expect = golden_order4(w);
    for (int j = -5; j <= 3; ++j) CHECK(q.at(j) == expect.at(j));
    CHECK(q == expect);
    if (w != 0) {
      CHECK(q.support_min() == -4);
      CHECK(q.support_max() == 2);
    }
  }
}

TEST_CASE("gregory factorization identity holds on the symbol level") {
  MatrixMask a = h1_mask(Rational(1, 32), Rational(-1, 10));
  for (unsigned n = 1; n <= 4; ++n) {
    FactorizeOutcome out = factorize_gregory(a, n);
    REQUIRE(out.success());
    const GregoryFactorization& f = *out.factorization;
    CHECK(f.order() == n);
    MatrixSymbol g = gregory_operator(n).symbol();
    MatrixSymbol lhs = g * symbol(a);
    MatrixSymbol rhs = symbol(f.quotient()).scaled(rational_pow(Rational(1, 2), n)) *
                       g.substituted(2);
    CHECK(lhs == rhs);
    CHECK(f.cascade() == f.quotient().scaled(Rational(2)));
    CHECK(f.contraction() == f.quotient().scaled(Rational(1, 2)));
  }
  CHECK_THROWS_AS(factorize_gregory(a, 0), std::invalid_argument);
}

TEST_CASE("non-divisible parameters name the failing entry") {
  MatrixMask a = h1_mask(Rational(1, 16), Rational(-1, 10));
  for (unsigned n = 1; n <= 3; ++n) CHECK(factorize_gregory(a, n).success());
  FactorizeOutcome out = factorize_gregory(a, 4);
  REQUIRE_FALSE(out.success());
  REQUIRE(out.failure.has_value());
  CHECK(out.failure->entry == "b21");
  CHECK_FALSE(out.failure->remainder.is_zero());
}

TEST_CASE("taylor factorization of the reference scheme") {
  MatrixMask a = h1_mask(Rational(1, 32), Rational(-1, 10));
  TaylorFactorization t = factorize_taylor(a);
  REQUIRE(t.success());
  const MatrixMask& b = *t.mask;
  CHECK(b.support_min() == -3);
  CHECK(b.support_max() == 2);

  MatrixSymbol ts = taylor_operator().symbol();
  CHECK(ts * symbol(a) == symbol(b).scaled(Rational(1, 2)) * ts.substituted(2));

  // the second unit vector is fixed by both residue sums
  Matrix2 even, odd;
  for (int j = b.support_min(); j <= b.support_max(); ++j) {
    if (((j % 2) + 2) % 2 == 0)
      even = even + b.at(j);
    else
      odd = odd + b.at(j);
  }
  Vec2 e2;
  e2[1] = 1;
  CHECK(even * e2 == e2);
  CHECK(odd * e2 == e2);
  CHECK(!eigenspace(b).empty());
}

TEST_CASE("factor_step solves the two-identity example exactly") {
  MatrixMask b(0, {Matrix2::identity(), Matrix2::identity()});
  StepOutcome out = factor_step(b, Matrix2::identity());
  REQUIRE(out.success());
  const MatrixMask& c = *out.mask;
  CHECK(c.support_min() == 0);
  CHECK(c.support_max() == 1);
  CHECK(c.at(0) == m2(0, 0, 0, 2));
  CHECK(c.at(1) == m2(2, 0, 0, 2));

  MatrixSymbol dv = difference_operator(Matrix2::identity()).symbol();
  CHECK(dv * symbol(b) == symbol(c).scaled(Rational(1, 2)) * dv.substituted(2));
}

TEST_CASE("factor_step rejects a generator whose first column is not fixed") {
  MatrixMask a = h1_mask(Rational(1, 32), Rational(-1, 10));
  TaylorFactorization t = factorize_taylor(a);
  REQUIRE(t.success());
  StepOutcome out = factor_step(*t.mask, Matrix2::identity());
  REQUIRE_FALSE(out.success());
  REQUIRE(out.failure.has_value());
  CHECK((out.failure->entry == "c11" || out.failure->entry == "c21"));
  CHECK_FALSE(out.failure->remainder.is_zero());
}

TEST_CASE("factor_step requires an invertible generator") {
  MatrixMask b(0, {Matrix2::identity(), Matrix2::identity()});
  CHECK_THROWS_AS(factor_step(b, m2(1, 2, 2, 4)), std::domain_error);
}

TEST_CASE("iterated elementary steps reproduce the one-shot factor") {
  MatrixMask a = h1_mask(Rational(1, 32), Rational(-1, 10));
  TaylorFactorization t = factorize_taylor(a);
  REQUIRE(t.success());
  MatrixMask cur = *t.mask;
  for (unsigned n = 1; n <= 4; ++n) {
    StepOutcome step = factor_step(cur, generator_matrix(n - 1));
    REQUIRE(step.success());
    cur = *step.mask;
    FactorizeOutcome out = factorize_gregory(a, n);
    REQUIRE(out.success());
    CHECK(cur == out.factorization->cascade());
  }
}

TEST_CASE("cascade factors have the predicted fixed vectors") {
  MatrixMask a = h1_mask(Rational(1, 32), Rational(-1, 10));
  for (unsigned n = 1; n <= 3; ++n) {
    FactorizeOutcome out = factorize_gregory(a, n);
    REQUIRE(out.success());
    Vec2 expect;
    expect[0] = 1;
    expect[1] = gregory(n);
    CHECK(same_span(eigenspace(out.factorization->cascade()), {expect}));
  }
  FactorizeOutcome out4 = factorize_gregory(a, 4);
  REQUIRE(out4.success());
  CHECK(eigenspace(out4.factorization->cascade()).empty());
}

TEST_CASE("certification pipeline on the reference scheme") {
  MatrixMask good = h1_mask(Rational(1, 32), Rational(-1, 10));
  CertifyResult r = certify_cd(good, 4, 12);
  CHECK(r.certified);
  CHECK(r.stage == CertifyStage::done);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->contractive);
  CHECK(r.certificate->iterations == 6);
  CHECK(r.certificate->norm == make_rational(2311831, 3200000));
  REQUIRE(r.factorization.has_value());
  CHECK(operator_norm(r.factorization->contraction()) == make_rational(172, 5));

  CertifyResult capped = certify_cd(good, 4, 5);
  CHECK_FALSE(capped.certified);
  CHECK(capped.stage == CertifyStage::contractivity);
  REQUIRE(capped.certificate.has_value());
  CHECK_FALSE(capped.certificate->contractive);
  CHECK(capped.certificate->iterations == 5);

  CertifyResult bad = certify_cd(h1_mask(Rational(1, 16), Rational(-1, 10)), 4, 12);
  CHECK_FALSE(bad.certified);
  CHECK(bad.stage == CertifyStage::spectral);
  CHECK_FALSE(bad.spectral.success());

  CertifyResult slow = certify_cd(h1_mask(Rational(1, 32), Rational(-3, 25)), 4, 12);
  CHECK(slow.certified);
  REQUIRE(slow.certificate.has_value());
  CHECK(slow.certificate->iterations == 10);
  CHECK(slow.certificate->norm ==
        make_rational(471381180289288757L, 625000000000000000L));
}

TEST_CASE("alternative generators still certify contractivity") {
  MatrixMask a = h1_mask(Rational(1, 32), Rational(-1, 10));
  for (unsigned swap_level = 0; swap_level < 4; ++swap_level) {
    MatrixMask chain = adaptive_chain(a, 4, swap_level);
    ContractivityCertificate cert =
        contractivity_certificate(chain.scaled(Rational(1, 4)), 12);
    CHECK(cert.contractive);
    CHECK(cert.iterations <= 12);
  }
}

TEST_SUITE_END();
