#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermite/laurent.hpp"
#include "hermite/mask.hpp"
#include "hermite/spectral.hpp"
#include "hermite/stencil.hpp"

namespace hermite {

// A symbol division that did not come out exact: the entry of the factor
// being computed, the divisor and the nonzero remainder.
struct DivisionFailure {
  std::string entry;
  Laurent divisor;
  Laurent remainder;
};

// Taylor factorization T(z) A(z) = 2^-1 B(z) T(z^2), solved for B.
// Requires the order-1 spectral condition; fails with the offending entry
// otherwise.
struct TaylorFactorization {
  std::optional<MatrixMask> mask;
  std::optional<DivisionFailure> failure;
  bool success() const { return mask.has_value(); }
};

TaylorFactorization factorize_taylor(const MatrixMask& A);

// Gregory factorization G_n(z) A(z) = 2^-n Q(z) G_n(z^2), solved entrywise
// for Q.  quotient() is Q itself; cascade() = 2 Q is the factor appearing in
// the difference-operator cascade; contraction() = Q / 2 is the operator
// whose iterated norms certify C^n convergence.
class GregoryFactorization {
 public:
  GregoryFactorization(unsigned order, MatrixMask quotient)
      : order_(order), quotient_(std::move(quotient)) {}

  unsigned order() const { return order_; }
  const MatrixMask& quotient() const { return quotient_; }
  MatrixMask cascade() const { return quotient_.scaled(Rational(2)); }
  MatrixMask contraction() const { return quotient_.scaled(Rational(1, 2)); }

 private:
  unsigned order_;
  MatrixMask quotient_;
};

struct FactorizeOutcome {
  std::optional<GregoryFactorization> factorization;
  std::optional<DivisionFailure> failure;
  bool success() const { return factorization.has_value(); }
};

FactorizeOutcome factorize_gregory(const MatrixMask& A, unsigned n);

// One step of the difference-operator cascade: given the current factor B and
// an invertible generator matrix V whose first column is a common fixed
// vector of the even and odd coefficient sums of B, solve
//
//   D_V(z) B(z) = 2^-1 C(z) D_V(z^2)
//
// for C.  Fails with a division witness when V is not a valid generator.
struct StepOutcome {
  std::optional<MatrixMask> mask;
  std::optional<DivisionFailure> failure;
  bool success() const { return mask.has_value(); }
};

StepOutcome factor_step(const MatrixMask& B, const Matrix2& V);

// Full convergence certificate for C^d smoothness of the scheme: spectral
// condition of order d, Gregory factorization of order d, then contractivity
// of the contraction factor.
enum class CertifyStage { spectral, factorize, contractivity, done };

struct CertifyResult {
  unsigned order = 0;
  CertifyStage stage = CertifyStage::spectral;
  bool certified = false;
  SpectralResult spectral;
  std::optional<GregoryFactorization> factorization;
  std::optional<DivisionFailure> division_failure;
  std::optional<ContractivityCertificate> certificate;
};

CertifyResult certify_cd(const MatrixMask& A, unsigned d, unsigned maxN = 12,
                         const IterateLimits& limits = iterate_limits_from_env());

}  // namespace hermite
