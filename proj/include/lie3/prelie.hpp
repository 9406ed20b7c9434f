#pragma once

#include "lie3/algebra.hpp"
#include "lie3/derivation.hpp"
#include "lie3/parallel.hpp"
#include "lie3/report.hpp"

namespace lie3 {

// General trilinear product table. Nothing is assumed beyond what the
// verifier checks; antisymmetry in the first two slots is an invariant of
// the constructions, asserted by verify_prelie.
struct TriProduct {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<Vec> table;  // n^3 entries, (i*n + j)*n + k

  TriProduct() = default;
  TriProduct(std::string name_, int dim_);

  const Vec& at(int i, int j, int k) const { return table[(static_cast<size_t>(i) * dim + j) * dim + k]; }
  Vec& at(int i, int j, int k) { return table[(static_cast<size_t>(i) * dim + j) * dim + k]; }

  // Trilinear extension to coordinate vectors.
  Vec product(const Vec& u, const Vec& v, const Vec& w) const;
};

// {x,y,z}_D = [Dx,Dy,z]; requires an involutive derivation.
TriProduct prelie_from_D(const Algebra& alg, const Mat& D);

// {x,y,z}_A = D[x,y,Dz]; the compatible 3-pre-Lie product.
TriProduct prelie_compatible(const Algebra& alg, const Mat& D);

// Slot-1/2 antisymmetry on all pairs plus the two five-variable
// compatibility identities on all basis 5-tuples.
Report verify_prelie(const TriProduct& p, Exec exec = default_exec());

// Sub-adjacent bracket {x,y,z} + {y,z,x} + {z,x,y}; requires verify_prelie
// to pass and checks Filippov on the result.
Algebra subadjacent(const TriProduct& p);

// {x,y,z}_{Dc} = D[Dx,Dy,Dz] on all triples, and D maps the sub-adjacent
// bracket of {,,}_D to the original bracket.
Report verify_D_isomorphism(const Algebra& alg, const Mat& D);

// Case-by-case values of {,,}_D and {,,}_{Dc} for basis triples classified
// by their eigenspace parts.
Report piecewise_check(const Algebra& alg, const Mat& D);

}  // namespace lie3
