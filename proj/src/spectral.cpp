#include "hermite/spectral.hpp"

#include <cstdlib>
#include <stdexcept>

#include "hermite/combinatorics.hpp"
#include "hermite/linalg.hpp"

namespace hermite {

namespace {

// (S_A [P; P'])_j [component] - 2^-k ([P; P'](j)) [component]
Rational equation_residual(const MatrixMask& A, const Polynomial& P, unsigned k,
                           int j, int component) {
  Polynomial dP = differentiate(P);
  Rational lhs(0);
  // slightly over-wide window of indices m with j - 2m inside the support;
  // A.at is zero off support
  int m_from = (j - A.support_max()) / 2 - 2;
  int m_to = (j - A.support_min()) / 2 + 2;
  for (int m = m_from; m <= m_to; ++m) {
    Matrix2 Am = A.at(j - 2 * m);
    if (Am.is_zero()) continue;
    Rational x(m);
    lhs += Am(component, 0) * P(x) + Am(component, 1) * dP(x);
  }
  Rational scale = rational_pow(Rational(1, 2), k);
  Rational xj(j);
  Rational rhs = scale * (component == 0 ? P(xj) : dP(xj));
  return lhs - rhs;
}

Polynomial family_member(const std::vector<Rational>& lower, unsigned k) {
  std::vector<Rational> coeffs(k + 1, Rational(0));
  for (unsigned i = 0; i < k; ++i) coeffs[i] = lower[i];
  coeffs[k] = Rational(1) / Rational(factorial(k));
  return Polynomial(std::move(coeffs));
}

}  // namespace

SpectralResult solve_spectral(const MatrixMask& A, unsigned d) {
  if (A.is_zero() || A.dilation() != 2)
    throw std::invalid_argument("solve_spectral: subdivision mask with dilation 2 required");
  SpectralResult result;
  result.requested = d;

  for (unsigned k = 0; k <= d; ++k) {
    const int jlo = -static_cast<int>(k) - 2, jhi = static_cast<int>(k) + 2;
    const size_t rows = static_cast<size_t>(2 * (jhi - jlo + 1));
    Matrix M(rows, k);
    std::vector<Rational> rhs(rows, Rational(0));
    Rational scale = rational_pow(Rational(1, 2), k);
    Polynomial top = Polynomial::monomial(k, Rational(1) / Rational(factorial(k)));
    Polynomial dtop = differentiate(top);

    size_t row = 0;
    for (int j = jlo; j <= jhi; ++j) {
      for (int component = 0; component < 2; ++component, ++row) {
        // coefficient of the unknown u_i (coefficient of x^i in P_k)
        for (unsigned i = 0; i < k; ++i) {
          Rational coef(0);
          for (int m = (j - A.support_max() - 1) / 2 - 1; m <= (j - A.support_min()) / 2 + 1; ++m) {
            int idx = j - 2 * m;
            Matrix2 Am = A.at(idx);
            if (Am.is_zero()) continue;
            Rational xm(m);
            Rational mon = rational_pow(xm, i);
            Rational dmon = i == 0 ? Rational(0) : Rational(i) * rational_pow(xm, i - 1);
            coef += Am(component, 0) * mon + Am(component, 1) * dmon;
          }
          Rational xj(j);
          Rational mon = rational_pow(xj, i);
          Rational dmon = i == 0 ? Rational(0) : Rational(i) * rational_pow(xj, i - 1);
          coef -= scale * (component == 0 ? mon : dmon);
          M.at(row, i) = coef;
        }
        // constant contribution of the fixed leading term x^k / k!
        Rational c(0);
        for (int m = (j - A.support_max() - 1) / 2 - 1; m <= (j - A.support_min()) / 2 + 1; ++m) {
          int idx = j - 2 * m;
          Matrix2 Am = A.at(idx);
          if (Am.is_zero()) continue;
          Rational xm(m);
          c += Am(component, 0) * top(xm) + Am(component, 1) * dtop(xm);
        }
        Rational xj(j);
        c -= scale * (component == 0 ? top(xj) : dtop(xj));
        rhs[row] = -c;
      }
    }

    auto sol = solve_linear_system(M, rhs);
    std::vector<Rational> lower;
    if (sol.consistent) {
      lower = sol.particular;
    } else {
      // candidate from the pivot equations only, then report the first
      // equation it fails to satisfy
      Matrix Mp(sol.pivot_rows.size(), k);
      std::vector<Rational> rp(sol.pivot_rows.size());
      for (size_t i = 0; i < sol.pivot_rows.size(); ++i) {
        for (unsigned c2 = 0; c2 < k; ++c2) Mp.at(i, c2) = M.at(sol.pivot_rows[i], c2);
        rp[i] = rhs[sol.pivot_rows[i]];
      }
      auto psol = solve_linear_system(Mp, rp);
      lower = psol.particular;
    }

    Polynomial Pk = family_member(lower, k);

    if (!sol.consistent) {
      SpectralFailure fail;
      fail.order = k;
      fail.candidate = result.polynomials;
      fail.candidate.push_back(Pk);
      for (int j = jlo; j <= jhi && !result.failure; ++j)
        for (int component = 0; component < 2; ++component) {
          Rational res = equation_residual(A, Pk, k, j, component);
          if (res != 0) {
            fail.output_index = j;
            fail.component = component;
            fail.residual = res;
            result.failure = fail;
            break;
          }
        }
      return result;
    }

    result.polynomials.push_back(Pk);
  }

  // independent confirmation away from the construction window
  int vhi = 3 * static_cast<int>(d) + 9;
  if (!verify_spectral(A, result.polynomials, static_cast<int>(d) + 3, vhi))
    throw std::logic_error("solve_spectral: verification window rejected a solution");
  return result;
}

bool verify_spectral(const MatrixMask& A, const std::vector<Polynomial>& family,
                     int window_lo, int window_hi) {
  for (size_t k = 0; k < family.size(); ++k)
    for (int j = window_lo; j <= window_hi; ++j)
      for (int component = 0; component < 2; ++component)
        if (equation_residual(A, family[k], static_cast<unsigned>(k), j, component) != 0)
          return false;
  return true;
}

HermiteSequence sample_polynomial(const Polynomial& p, int lo, int hi) {
  Polynomial dp = differentiate(p);
  HermiteSequence out;
  for (int j = lo; j <= hi; ++j) {
    Vec2 v;
    Rational x(j);
    v[0] = p(x);
    v[1] = dp(x);
    out.set(j, v);
  }
  return out;
}

bool check_reproduction(const MatrixMask& A, unsigned degree) {
  if (A.is_zero() || A.dilation() != 2)
    throw std::invalid_argument("check_reproduction: subdivision mask with dilation 2 required");
  int radius = 2 * (std::abs(A.support_min()) + std::abs(A.support_max())) + 8;
  for (unsigned m = 0; m <= degree; ++m) {
    Polynomial p = Polynomial::monomial(m);
    Polynomial dp = differentiate(p);
    HermiteSequence data = sample_polynomial(p, -radius, radius);
    for (unsigned level = 1; level <= 2; ++level) {
      RefinedData refined = hermite_refine(A, data, level);
      if (refined.valid_empty()) return false;
      Rational h = rational_pow(Rational(1, 2), level);
      for (int j = refined.valid_min; j <= refined.valid_max; ++j) {
        Rational x = Rational(j) * h;
        Vec2 got = refined.values.at(j);
        if (got[0] != p(x) || got[1] != dp(x)) return false;
      }
    }
  }
  return true;
}

}  // namespace hermite
