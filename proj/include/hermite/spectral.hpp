#pragma once

#include <optional>
#include <vector>

#include "hermite/mask.hpp"
#include "hermite/polynomial.hpp"

namespace hermite {

// Witness for a failed spectral equation: with the candidate polynomial
// solved from the pivot equations, the stated component of
// (S_A [P; P'])_{output_index} - 2^-order [P; P'](output_index / ...)
// is the nonzero residual below.
struct SpectralFailure {
  unsigned order = 0;
  int output_index = 0;
  int component = 0;
  Rational residual;
  std::vector<Polynomial> candidate;  // P_0 .. P_(order) used to evaluate the residual
};

struct SpectralResult {
  unsigned requested = 0;
  // P_0 .. P_d on success; the polynomials found before the failing order
  // otherwise
  std::vector<Polynomial> polynomials;
  std::optional<SpectralFailure> failure;
  bool success() const { return !failure.has_value(); }
};

// Solve for the spectral family of order d: polynomials P_k, deg P_k = k,
// leading coefficient 1/k!, with
//
//   S_A [P_k; P_k'](at the integers) = 2^-k [P_k; P_k'] .
//
// Lower coefficients of P_k are the unknowns; the linear system collects both
// components of the outputs j in [-(k+2), k+2].  A solution is re-checked on
// the disjoint window [k+3, 3k+9] before it is accepted.
SpectralResult solve_spectral(const MatrixMask& A, unsigned d);

// check S_A [P; P'] = 2^-k [P; P'] at outputs j in [window_lo, window_hi]
// for every P in the family (k = position in the list)
bool verify_spectral(const MatrixMask& A, const std::vector<Polynomial>& family,
                     int window_lo, int window_hi);

// Hermite samples [p(j); p'(j)] for j in [lo, hi].
HermiteSequence sample_polynomial(const Polynomial& p, int lo, int hi);

// True when the scheme reproduces [p; p'] for every polynomial p of degree
// <= degree: refining exact Hermite samples gives exact Hermite samples of
// the same polynomial on the valid windows of the first two refinement
// levels.
bool check_reproduction(const MatrixMask& A, unsigned degree);

}  // namespace hermite
