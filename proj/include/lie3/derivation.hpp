#pragma once

#include "lie3/algebra.hpp"
#include "lie3/matrix.hpp"
#include "lie3/report.hpp"

#include <vector>

namespace lie3 {

// The +1 / -1 eigenspaces of an involutive derivation, both in RREF.
struct EigenSplit {
  Subspace plus;
  Subspace minus;
};

// D[x_i,x_j,x_k] = [Dx_i,x_j,x_k] + [x_i,Dx_j,x_k] + [x_i,x_j,Dx_k]
// on all i<j<k.
Report verify_derivation(const Algebra& alg, const Mat& D);

// Basis of Der(A): nullspace (RREF over the n^2 matrix coordinates) of the
// linear system expressing the derivation law over all i<j<k.
std::vector<Mat> derivation_space(const Algebra& alg);

// Derivation law plus exact D*D = I.
Report verify_involutive(const Algebra& alg, const Mat& D);

// A = A_1 (+) A_{-1}; requires verify_involutive to pass and asserts that
// both parts are abelian subalgebras.
EigenSplit eigensplit(const Algebra& alg, const Mat& D);

// [Dx,Dy,Dz] = D([Dx,Dy,z] + [Dy,Dz,x] + [Dz,Dx,y]) on all basis triples.
Report verify_dd_identity(const Algebra& alg, const Mat& D);

// All diagonal +-1 matrices that are involutive derivations, in
// lexicographic sign order (+1 before -1). Dim is capped at 24.
std::vector<Mat> search_involutive_diagonal(const Algebra& alg);

}  // namespace lie3
