#pragma once

#include "lie3/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lie3 {

using Index = std::vector<int>;  // 0-based basis indices, length == rank

// Sparse element of (F^dim)^{⊗rank}. Absent entries are zero and stored
// entries are never zero, so equality is literal map comparison.
struct Tensor {
  int rank = 0;
  int dim = 0;
  std::map<Index, Rat> entries;

  Tensor() = default;
  Tensor(int rank_, int dim_) : rank(rank_), dim(dim_) {}

  bool is_zero() const { return entries.empty(); }
  Rat at(const Index& idx) const {
    auto it = entries.find(idx);
    return it == entries.end() ? Rat(0) : it->second;
  }
  // Accumulates and drops the entry if it cancels to zero.
  void add_entry(const Index& idx, const Rat& value);

  friend bool operator==(const Tensor& a, const Tensor& b) = default;
};

Tensor tensor_add(const Tensor& a, const Tensor& b);
Tensor tensor_sub(const Tensor& a, const Tensor& b);
Tensor tensor_neg(const Tensor& t);
Tensor tensor_scale(const Rat& s, const Tensor& t);

// Pure tensor u1 ⊗ ... ⊗ uk of coordinate vectors sharing one dim.
Tensor tensor_product(const std::vector<Vec>& factors);

// φ_pq: swaps factor slots p and q (1-based slots). Involutive.
Tensor permute_factors(const Tensor& t, int p, int q);

// Unnormalized alternating sum Σ_{σ∈S3} sgn(σ) σ(a⊗b⊗c); six terms,
// no 1/3! factor. This is the "∧" of the bialgebra tables.
Tensor wedge3(const Vec& a, const Vec& b, const Vec& c);

// (Σ_{σ∈S3} sgn(σ) σ(t)) / 6 and whether t already equals it.
std::pair<Tensor, bool> alternating_part(const Tensor& t);

// Deterministic rendering, e.g. "x1(x)x2(x)x3 - 2*x2(x)x1(x)x3".
std::string format_tensor(const Tensor& t, const std::vector<std::string>& labels);

}  // namespace lie3
