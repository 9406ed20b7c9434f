#pragma once

#include "lie3/algebra.hpp"
#include "lie3/derivation.hpp"
#include "lie3/parallel.hpp"
#include "lie3/report.hpp"
#include "lie3/tensor.hpp"

namespace lie3 {

// Coproduct on a dim-d algebra: for each basis index, the three parts of
// its image in the triple tensor power.
struct Coproduct {
  int dim = 0;
  std::vector<Tensor> d1, d2, d3;  // one rank-3 tensor per basis index

  explicit Coproduct(int dim_ = 0)
      : dim(dim_), d1(static_cast<size_t>(dim_), Tensor(3, dim_)), d2(d1), d3(d1) {}

  Tensor total(int i) const {
    return tensor_add(tensor_add(d1[static_cast<size_t>(i)], d2[static_cast<size_t>(i)]), d3[static_cast<size_t>(i)]);
  }

  friend bool operator==(const Coproduct& a, const Coproduct& b) = default;
};

// rho*(x_i,x_j) = -(ad(x_i,x_j))^T acting on the dual space.
Representation coadjoint(const Algebra& alg);

// A x| A*: dim 2n, indices 0..n-1 -> x_i, n..2n-1 -> x_i*. Brackets of
// three unstarred vectors embed A; one starred slot uses the coadjoint
// action; two or more starred slots vanish.
Algebra semidirect(const Algebra& alg);

// r = sum_i x_i* (x) Dx_i - sum_i Dx_i (x) x_i*, a rank-2 tensor over the
// semidirect product indexing. Skew-symmetric by construction.
Tensor r_from_D(const Algebra& alg, const Mat& D);

// [[r,r,r]]: the four-sum rank-4 expansion over r's monomials.
Tensor cybe_bracket(const Algebra& B, const Tensor& r, Exec exec = default_exec());

// Passes iff cybe_bracket is the zero tensor; lists up to 10 nonzero
// coordinates on failure.
Report verify_cybe(const Algebra& B, const Tensor& r, Exec exec = default_exec());

// Writing r = sum u_i (x) v_i over monomials:
//   D1(x)  = sum_{i,j} mu(x, u_i, u_j) (x) v_j (x) v_i
//   D2 = phi13 phi12 D1 (apply phi12 first), D3 = phi12 phi13 D1.
// Requires r skew-symmetric and verify_cybe to pass.
Coproduct coproduct_from_r(const Algebra& B, const Tensor& r);

// Same coproduct computed from the eigenspace split instead of r: the
// twelve-sum expansion grouped by the signs of the basis vectors (the
// basis need not be sorted with the +1 part first; index sets are filtered
// by sign). Requires D to be a diagonal +-1 involutive derivation.
Coproduct coproduct_via_split(const Algebra& alg, const Mat& D);

// 1-cocycle law for one part of a coproduct with ad acting in the given
// tensor slot (1-based) and the identity elsewhere:
//   D(mu(a,b,c)) = rho(a,b)D(c) + rho(b,c)D(a) + rho(c,a)D(b)
// on basis triples a<b<c; the remaining triples follow because both sides
// are alternating and trilinear.
Report verify_cocycle(const Algebra& B, const std::vector<Tensor>& part, int slot);

// Structure constants on B* read off the total coproduct through the
// pairing; every image must be alternating.
Algebra dual_bracket(const Coproduct& delta);

// Aggregate: B passes Filippov, every image is alternating, all three
// cocycle checks pass, and the dual bracket passes Filippov.
CompositeReport verify_local_cocycle_bialgebra(const Algebra& B, const Coproduct& delta);

}  // namespace lie3
