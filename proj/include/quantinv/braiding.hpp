#pragma once

#include <cstddef>
#include <vector>

#include "quantinv/repn.hpp"

namespace quantinv {

using LMatrix = SparseMatrix<LaurentPoly>;

/// Ordered tensor product of modules with the coproduct
///   Delta(E_i) = E_i (x) 1 + Ktilde_i (x) E_i,
///   Delta(F_i) = F_i (x) Ktilde_{-i} + 1 (x) F_i,
/// iterated; the opposite coproduct Delta-bar swaps Ktilde_i and Ktilde_{-i}.
/// Basis index is mixed-radix with the first factor most significant.
struct TensorSpace {
  std::vector<RepnPtr> factors;

  std::size_t dim() const;
  Weight weight_of(std::size_t index) const;
  LMatrix E(std::size_t i, bool bar = false) const;
  LMatrix F(std::size_t i, bool bar = false) const;
};

/// Quasi-R-matrix on V (x) W, solved from Delta(E_i) Theta = Theta Delta-bar(E_i)
/// by raising the first factor from its lowest weight vector, where Theta acts
/// trivially. Throws ConstructionError if the residual checks
/// Delta(u) Theta = Theta Delta-bar(u) for u = E_i, F_i fail.
LMatrix theta_on(const Repn& v, const Repn& w);

/// A(v (x) w) = q^{<wt v, wt w>} v (x) w.
LMatrix weight_operator(const Repn& v, const Repn& w);

/// Flip V (x) W -> W (x) V.
LMatrix flip_operator(std::size_t dim_v, std::size_t dim_w);

/// Inverse of a unipotent matrix by the terminating Neumann series.
LMatrix unipotent_inverse(const LMatrix& u);

/// A module map with its source factors recorded.
struct BraidOp {
  RepnPtr first;   // source V
  RepnPtr second;  // source W
  LMatrix matrix;
};

/// sigma = flip o A o Theta^{-1}: V (x) W -> W (x) V.
BraidOp braiding(RepnPtr v, RepnPtr w);
/// sigma^{-1} = Theta o A^{-1} o flip: W (x) V -> V (x) W; `first`/`second`
/// still name V and W.
BraidOp braiding_inverse(RepnPtr v, RepnPtr w);

/// True iff `m`: source -> target commutes with every E_i and F_i.
bool intertwines(const LMatrix& m, const TensorSpace& source, const TensorSpace& target);

/// Checks (sigma_{V,W} (x) 1)(1 (x) sigma_{U,W})(sigma_{U,V} (x) 1)
///   = (1 (x) sigma_{U,V})(sigma_{U,W} (x) 1)(1 (x) sigma_{V,W}) on U (x) V (x) W.
bool yang_baxter_holds(RepnPtr u, RepnPtr v, RepnPtr w);

/// Identity-padded operator 1_{left} (x) m (x) 1_{right}.
LMatrix pad(const LMatrix& m, std::size_t left, std::size_t right);

}  // namespace quantinv
