#include "hermite/factorize.hpp"

#include <stdexcept>

#include "hermite/combinatorics.hpp"

namespace hermite {

namespace {

Laurent delta_symbol() {
  return Laurent::term(-1, Rational(1)) - Laurent::constant(Rational(1));
}

Laurent delta2_symbol() {
  // 1/z^2 - 1
  return Laurent::term(-2, Rational(1)) - Laurent::constant(Rational(1));
}

Laurent power(const Laurent& base, unsigned n) {
  Laurent acc = Laurent::constant(Rational(1));
  for (unsigned i = 0; i < n; ++i) acc *= base;
  return acc;
}

std::optional<DivisionFailure> try_divide(const std::string& entry,
                                          const Laurent& num, const Laurent& den,
                                          Laurent& out) {
  LaurentDivision d = divide(num, den);
  if (!d.exact) return DivisionFailure{entry, den, d.remainder};
  out = d.quotient;
  return std::nullopt;
}

}  // namespace

TaylorFactorization factorize_taylor(const MatrixMask& A) {
  TaylorFactorization result;
  if (A.is_zero() || A.dilation() != 2)
    throw std::invalid_argument("factorize_taylor: subdivision mask with dilation 2 required");

  MatrixSymbol M = taylor_operator().symbol() * symbol(A);
  Laurent d2 = delta2_symbol();

  // B = 2 M T(z^2)^-1 with T(z^2)^-1 = [[1/d2, 1/d2], [0, 1]]
  MatrixSymbol B;
  const char* names[2] = {"b11", "b21"};
  for (int i = 0; i < 2; ++i) {
    Laurent q;
    if (auto fail = try_divide(names[i], M.at(i, 0) * Rational(2), d2, q)) {
      result.failure = fail;
      return result;
    }
    B.at(i, 0) = q;
    B.at(i, 1) = q + M.at(i, 1) * Rational(2);
  }

  // confirm T(z) A(z) = 2^-1 B(z) T(z^2) exactly
  MatrixSymbol lhs = M;
  MatrixSymbol rhs = (B * taylor_operator().symbol().substituted(2)).scaled(Rational(1, 2));
  if (!(lhs == rhs))
    throw std::logic_error("factorize_taylor: residual of the factor identity is not zero");

  result.mask = mask_from_symbol(B);
  return result;
}

FactorizeOutcome factorize_gregory(const MatrixMask& A, unsigned n) {
  FactorizeOutcome result;
  if (A.is_zero() || A.dilation() != 2)
    throw std::invalid_argument("factorize_gregory: subdivision mask with dilation 2 required");
  if (n == 0) throw std::invalid_argument("factorize_gregory: order must be positive");

  const MatrixSymbol As = symbol(A);
  const Laurent& a11 = As.at(0, 0);
  const Laurent& a12 = As.at(0, 1);
  const Laurent& a21 = As.at(1, 0);
  const Laurent& a22 = As.at(1, 1);

  Laurent delta = delta_symbol();
  Laurent d2 = delta2_symbol();
  Laurent g = gregory_tail(n);                 // g_n(z)
  Laurent g2 = g.substituted(2);               // g_n(z^2)
  Rational two_n = rational_pow(Rational(2), n);

  MatrixSymbol B;

  // b11 = 2^n (d2 a22 - g_n(z^2) a21) / (delta (1/z + 1)^(n+1))
  {
    Laurent num = (d2 * a22 - g2 * a21) * two_n;
    Laurent den = delta * power(Laurent::term(-1, Rational(1)) + Laurent::constant(Rational(1)),
                                n + 1);
    Laurent q;
    if (auto fail = try_divide("b11", num, den, q)) {
      result.failure = fail;
      return result;
    }
    B.at(0, 0) = q;
  }

  // b12 = 2^n delta^(n-1) a21 / (1/z + 1)
  {
    Laurent num = power(delta, n - 1) * a21 * two_n;
    Laurent den = Laurent::term(-1, Rational(1)) + Laurent::constant(Rational(1));
    Laurent q;
    if (auto fail = try_divide("b12", num, den, q)) {
      result.failure = fail;
      return result;
    }
    B.at(0, 1) = q;
  }

  // b21 = 2^n (d2 (delta a12 + g_n(z) a22) - g_n(z^2) (delta a11 + g_n(z) a21))
  //        / d2^(n+1)
  {
    Laurent num = (d2 * (delta * a12 + g * a22) - g2 * (delta * a11 + g * a21)) * two_n;
    Laurent den = power(d2, n + 1);
    Laurent q;
    if (auto fail = try_divide("b21", num, den, q)) {
      result.failure = fail;
      return result;
    }
    B.at(1, 0) = q;
  }

  // b22 = 2^n (delta a11 + g_n(z) a21) / d2
  {
    Laurent num = (delta * a11 + g * a21) * two_n;
    Laurent q;
    if (auto fail = try_divide("b22", num, d2, q)) {
      result.failure = fail;
      return result;
    }
    B.at(1, 1) = q;
  }

  // confirm G_n(z) A(z) = 2^-n B(z) G_n(z^2) exactly
  MatrixSymbol Gs = gregory_operator(n).symbol();
  MatrixSymbol lhs = Gs * As;
  MatrixSymbol rhs = (B * Gs.substituted(2)).scaled(Rational(1) / two_n);
  if (!(lhs == rhs))
    throw std::logic_error("factorize_gregory: residual of the factor identity is not zero");

  result.factorization = GregoryFactorization(n, mask_from_symbol(B));
  return result;
}

StepOutcome factor_step(const MatrixMask& B, const Matrix2& V) {
  StepOutcome result;
  if (B.is_zero() || B.dilation() != 2)
    throw std::invalid_argument("factor_step: subdivision mask with dilation 2 required");

  MatrixSymbol DV = difference_operator(V).symbol();  // throws for singular V
  MatrixSymbol M = DV * symbol(B);
  Laurent d2 = delta2_symbol();

  // C = 2 M D_V(z^2)^-1 and D_V(z^2)^-1 = V diag(1/d2, 1)
  MatrixSymbol C;
  const char* names[2] = {"c11", "c21"};
  for (int i = 0; i < 2; ++i) {
    Laurent first = M.at(i, 0) * V(0, 0) + M.at(i, 1) * V(1, 0);
    Laurent q;
    if (auto fail = try_divide(names[i], first * Rational(2), d2, q)) {
      result.failure = fail;
      return result;
    }
    C.at(i, 0) = q;
    C.at(i, 1) = (M.at(i, 0) * V(0, 1) + M.at(i, 1) * V(1, 1)) * Rational(2);
  }

  MatrixSymbol lhs = M;
  MatrixSymbol rhs = (C * DV.substituted(2)).scaled(Rational(1, 2));
  if (!(lhs == rhs))
    throw std::logic_error("factor_step: residual of the factor identity is not zero");

  result.mask = mask_from_symbol(C);
  return result;
}

CertifyResult certify_cd(const MatrixMask& A, unsigned d, unsigned maxN,
                         const IterateLimits& limits) {
  CertifyResult result;
  result.order = d;
  if (d == 0) throw std::invalid_argument("certify_cd: order must be positive");

  result.spectral = solve_spectral(A, d);
  result.stage = CertifyStage::spectral;
  if (!result.spectral.success()) return result;

  auto fact = factorize_gregory(A, d);
  result.stage = CertifyStage::factorize;
  if (!fact.success()) {
    result.division_failure = fact.failure;
    return result;
  }
  result.factorization = fact.factorization;

  result.stage = CertifyStage::contractivity;
  result.certificate =
      contractivity_certificate(fact.factorization->contraction(), maxN, limits);
  if (!result.certificate->contractive) return result;

  result.stage = CertifyStage::done;
  result.certified = true;
  return result;
}

}  // namespace hermite
