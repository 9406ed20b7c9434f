#pragma once

#include "lie3/matrix.hpp"
#include "lie3/parallel.hpp"
#include "lie3/rational.hpp"
#include "lie3/report.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace lie3 {

// Finite-dimensional 3-Lie algebra given by antisymmetric structure
// constants. Only ordered triples i<j<k (0-based) are stored; every other
// index order is recovered from permutation parity, so a bracket with a
// repeated argument is zero by construction.
struct Algebra {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;                // labels, "x1".."xn" by default
  std::map<std::array<int, 3>, Vec> c;           // (i<j<k) -> coefficients of [x_i,x_j,x_k]

  Algebra() = default;
  Algebra(std::string name_, int dim_);

  // Requires i<j<k; drops the entry when the value is zero.
  void set_bracket(int i, int j, int k, Vec value);

  // [x_i, x_j, x_k] for arbitrary index order (0-based), with sign.
  Vec bracket_basis(int i, int j, int k) const;

  // Trilinear totally antisymmetric extension to coordinate vectors.
  Vec bracket(const Vec& u, const Vec& v, const Vec& w) const;

  bool is_abelian() const { return c.empty(); }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim == b.dim && a.c == b.c;  // names/labels are presentation only
  }
};

Algebra abelian_algebra(int dim);

// Pair map of a representation: rho(x_i, x_j) stored for i<j only.
struct Representation {
  int alg_dim = 0;
  int mod_dim = 0;
  std::map<std::pair<int, int>, Mat> rho;  // (i<j) -> mod_dim x mod_dim

  void set(int i, int j, Mat m);
  Mat pair(int i, int j) const;                 // with antisymmetry sign
  Mat of(const Vec& u, const Vec& v) const;     // bilinear extension
};

Representation adjoint_rep(const Algebra& alg);

// ad(u,v): w -> [u,v,w].
Mat ad(const Algebra& alg, const Vec& u, const Vec& v);

// Filippov identity on all basis 5-tuples with i1<i2 and i3<i4<i5
// (the rest follows by multilinearity and antisymmetry).
Report verify_filippov(const Algebra& alg, Exec exec = default_exec());

// Subalgebra generated by all basis-triple brackets; span closed under the
// bracket to a fixpoint, returned in RREF.
Subspace derived_algebra(const Algebra& alg);

// Z(A) = {v : [v, x_i, x_j] = 0 for all i<j}, in RREF.
Subspace center(const Algebra& alg);

// Both representation axioms on basis 4-tuples (i1<i2, all i3,i4).
Report verify_representation(const Algebra& alg, const Representation& rep);

// [Tu,Tv,Tw] = T(rho(Tu,Tv)w + rho(Tv,Tw)u + rho(Tw,Tu)v) on all basis
// triples of the module.
Report verify_o_operator(const Algebra& alg, const Representation& rep, const Mat& T);

}  // namespace lie3
