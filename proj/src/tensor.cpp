#include "lie3/tensor.hpp"

#include "lie3/errors.hpp"

#include <algorithm>
#include <array>

namespace lie3 {

void Tensor::add_entry(const Index& idx, const Rat& value) {
  if (value == 0) return;
  auto it = entries.find(idx);
  if (it == entries.end()) {
    entries.emplace(idx, value);
    return;
  }
  it->second += value;
  if (it->second == 0) entries.erase(it);
}

static void check_same_shape(const Tensor& a, const Tensor& b) {
  if (a.rank != b.rank || a.dim != b.dim)
    throw ShapeError("tensor shape mismatch: rank " + std::to_string(a.rank) + "/dim " + std::to_string(a.dim) +
                     " vs rank " + std::to_string(b.rank) + "/dim " + std::to_string(b.dim));
}

Tensor tensor_add(const Tensor& a, const Tensor& b) {
  check_same_shape(a, b);
  Tensor out = a;
  for (const auto& [idx, v] : b.entries) out.add_entry(idx, v);
  return out;
}

Tensor tensor_sub(const Tensor& a, const Tensor& b) {
  check_same_shape(a, b);
  Tensor out = a;
  for (const auto& [idx, v] : b.entries) out.add_entry(idx, -v);
  return out;
}

Tensor tensor_neg(const Tensor& t) {
  Tensor out(t.rank, t.dim);
  for (const auto& [idx, v] : t.entries) out.entries.emplace(idx, -v);
  return out;
}

Tensor tensor_scale(const Rat& s, const Tensor& t) {
  Tensor out(t.rank, t.dim);
  if (s == 0) return out;
  for (const auto& [idx, v] : t.entries) out.entries.emplace(idx, s * v);
  return out;
}

Tensor tensor_product(const std::vector<Vec>& factors) {
  if (factors.empty()) throw ShapeError("tensor_product needs at least one factor");
  int dim = static_cast<int>(factors[0].size());
  for (const Vec& f : factors)
    if (static_cast<int>(f.size()) != dim) throw ShapeError("tensor_product factor dim mismatch");
  Tensor out(static_cast<int>(factors.size()), dim);
  Index idx(factors.size(), 0);
  // Recursive expansion over nonzero coordinates of each factor.
  auto expand = [&](auto&& self, size_t slot, const Rat& coeff) -> void {
    if (coeff == 0) return;
    if (slot == factors.size()) {
      out.add_entry(idx, coeff);
      return;
    }
    for (int i = 0; i < dim; ++i) {
      const Rat& c = factors[slot][static_cast<size_t>(i)];
      if (c == 0) continue;
      idx[slot] = i;
      self(self, slot + 1, coeff * c);
    }
  };
  expand(expand, 0, Rat(1));
  return out;
}

Tensor permute_factors(const Tensor& t, int p, int q) {
  if (p < 1 || q < 1 || p > t.rank || q > t.rank || p == q)
    throw ShapeError("permute_factors: slots " + std::to_string(p) + "," + std::to_string(q) +
                     " invalid for rank " + std::to_string(t.rank));
  Tensor out(t.rank, t.dim);
  for (const auto& [idx, v] : t.entries) {
    Index j = idx;
    std::swap(j[static_cast<size_t>(p - 1)], j[static_cast<size_t>(q - 1)]);
    out.entries.emplace(std::move(j), v);
  }
  return out;
}

namespace {
// The six permutations of S3 with their signs, as slot images.
constexpr std::array<std::array<int, 3>, 6> kPerm3 = {{
    {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1},
}};
constexpr std::array<int, 6> kSign3 = {1, -1, -1, -1, 1, 1};
}  // namespace

Tensor wedge3(const Vec& a, const Vec& b, const Vec& c) {
  if (a.size() != b.size() || a.size() != c.size()) throw ShapeError("wedge3 dim mismatch");
  int dim = static_cast<int>(a.size());
  Tensor out(3, dim);
  const Vec* args[3] = {&a, &b, &c};
  for (size_t s = 0; s < kPerm3.size(); ++s) {
    Tensor term = tensor_product({*args[static_cast<size_t>(kPerm3[s][0])],
                                  *args[static_cast<size_t>(kPerm3[s][1])],
                                  *args[static_cast<size_t>(kPerm3[s][2])]});
    out = tensor_add(out, tensor_scale(Rat(kSign3[s]), term));
  }
  return out;
}

std::pair<Tensor, bool> alternating_part(const Tensor& t) {
  if (t.rank != 3) throw ShapeError("alternating_part requires rank 3");
  Tensor sum(3, t.dim);
  for (size_t s = 0; s < kPerm3.size(); ++s) {
    for (const auto& [idx, v] : t.entries) {
      Index j(3);
      // σ acting on slots: slot m of the image takes the factor from slot σ(m).
      for (int m = 0; m < 3; ++m) j[static_cast<size_t>(m)] = idx[static_cast<size_t>(kPerm3[s][static_cast<size_t>(m)])];
      sum.add_entry(j, Rat(kSign3[s]) * v);
    }
  }
  Tensor alt = tensor_scale(frac(1, 6), sum);
  return {alt, alt == t};
}

std::string format_tensor(const Tensor& t, const std::vector<std::string>& labels) {
  if (t.entries.empty()) return "0";
  std::string out;
  for (const auto& [idx, v] : t.entries) {
    Rat c = v;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += to_string(c) + "*";
    for (size_t s = 0; s < idx.size(); ++s) {
      if (s) out += "(x)";
      out += labels[static_cast<size_t>(idx[s])];
    }
  }
  return out;
}

}  // namespace lie3
