#pragma once

#include <vector>

#include "hermite/laurent.hpp"
#include "hermite/mask.hpp"

namespace hermite {

// Finitely supported operator L acting on vector sequences by
// (L c)_j = sum_e L_e c_{j-e}, represented by its symbol
// L(z) = sum_e L_e z^e.
class StencilOperator {
 public:
  StencilOperator() = default;
  explicit StencilOperator(MatrixSymbol sym) : sym_(std::move(sym)) {}

  const MatrixSymbol& symbol() const { return sym_; }

  // composition: (this ∘ other)(z) = this(z) * other(z)
  StencilOperator after(const StencilOperator& other) const {
    return StencilOperator(sym_ * other.sym_);
  }

 private:
  MatrixSymbol sym_;
};

HermiteSequence apply_stencil(const StencilOperator& L, const HermiteSequence& c);

// Taylor operator, symbol [[1/z - 1, -1], [0, 1]].
StencilOperator taylor_operator();

// Gregory operator of order n >= 1, symbol
//   [[0, (1/z - 1)^n], [1/z - 1, g_n(z)]]
// with g_n(z) = -sum_{l=0}^{n-1} G_l (1/z - 1)^l.
StencilOperator gregory_operator(unsigned n);

// the polynomial g_n above
Laurent gregory_tail(unsigned n);

// difference operator attached to an invertible generator matrix V:
// symbol diag(1/z - 1, 1) V^-1.  Throws std::domain_error for singular V.
StencilOperator difference_operator(const Matrix2& V);

// generator matrices V^(0) = [[0,1],[1,0]] and V^(n) = [[1,0],[G_n,1]]
// whose difference operators chain the Taylor operator into the Gregory
// operator
Matrix2 generator_matrix(unsigned n);

// basis of { v : E_eps v = v for all residues eps }, where
// E_eps = sum_k A_{eps + dil k}
std::vector<Vec2> eigenspace(const MatrixMask& A);

// true when the two lists span the same subspace
bool same_span(const std::vector<Vec2>& a, const std::vector<Vec2>& b);

}  // namespace hermite
