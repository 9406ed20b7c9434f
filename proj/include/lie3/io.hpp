#pragma once

#include "lie3/algebra.hpp"
#include "lie3/bialgebra.hpp"
#include "lie3/matrix.hpp"
#include "lie3/tensor.hpp"

#include <string>

namespace lie3 {

// Line-oriented algebra description:
//   algebra <name>
//   dim <n>
//   basis <label> ... <label>        (optional; defaults x1..xn)
//   bracket i j k -> l:coeff [l:coeff ...]
// Indices are 1-based, triples must satisfy i<j<k, coefficients are "p" or
// "p/q", and '#' starts a comment. Throws ParseError with a line number.
Algebra parse_algebra(const std::string& text);

// Emits the format above; parse_algebra(emit_algebra(a)) == a.
std::string emit_algebra(const Algebra& alg);

// Derivation description:
//   derivation <name>
//   dim <n>
//   diag e1 ... en          -- or n lines "row a1 ... an"
Mat parse_derivation(const std::string& text);

// Rank-3 alternating tensor as a sum of coeff*a^b^c terms with factor
// indices strictly increasing; "0" when zero. Throws DomainError when the
// tensor is not alternating.
std::string wedge_normal_form(const Tensor& t, const std::vector<std::string>& labels);

}  // namespace lie3
