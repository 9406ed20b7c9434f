#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lie3/errors.hpp"
#include "lie3/tensor.hpp"

#include <array>
#include <vector>

using namespace lie3;

namespace {

Vec vec(std::vector<long> v) {
  Vec out;
  for (long x : v) out.push_back(Rat(x));
  return out;
}

// All six permutations of S3 with their signs, for brute-force oracles.
const std::array<std::pair<std::array<int, 3>, int>, 6> kS3 = {{
    {{0, 1, 2}, 1},
    {{1, 0, 2}, -1},
    {{0, 2, 1}, -1},
    {{2, 1, 0}, -1},
    {{1, 2, 0}, 1},
    {{2, 0, 1}, 1},
}};

Tensor alternating_oracle(const Vec& a, const Vec& b, const Vec& c) {
  Tensor out(3, static_cast<int>(a.size()));
  const Vec* f[3] = {&a, &b, &c};
  for (const auto& [perm, sign] : kS3) {
    Tensor term = tensor_product({*f[perm[0]], *f[perm[1]], *f[perm[2]]});
    out = tensor_add(out, sign > 0 ? term : tensor_neg(term));
  }
  return out;
}

}  // namespace

TEST_CASE("entries stay canonical") {
  Tensor t(2, 3);
  t.add_entry({0, 1}, Rat(2));
  t.add_entry({0, 1}, Rat(-2));
  CHECK(t.is_zero());
  t.add_entry({2, 2}, frac(1, 2));
  CHECK(t.at({2, 2}) == frac(1, 2));
  CHECK(t.at({0, 0}) == 0);
  CHECK(t.entries.size() == 1);
}

TEST_CASE("arithmetic") {
  Tensor a(2, 2), b(2, 2);
  a.add_entry({0, 1}, Rat(1));
  b.add_entry({0, 1}, Rat(3));
  b.add_entry({1, 0}, Rat(-1));
  CHECK(tensor_add(a, tensor_neg(a)).is_zero());
  CHECK(tensor_sub(b, b).is_zero());
  Tensor s = tensor_scale(frac(1, 3), b);
  CHECK(s.at({0, 1}) == 1);
  CHECK(s.at({1, 0}) == frac(-1, 3));
  CHECK(tensor_scale(Rat(0), b).is_zero());
}

TEST_CASE("tensor_product expands coordinates") {
  Tensor t = tensor_product({vec({1, 2}), vec({0, -1})});
  CHECK(t.rank == 2);
  CHECK(t.at({0, 1}) == -1);
  CHECK(t.at({1, 1}) == -2);
  CHECK(t.at({0, 0}) == 0);
  CHECK(t.entries.size() == 2);
}

TEST_CASE("permute_factors is the slot transposition") {
  Tensor t = tensor_product({vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1})});
  Tensor p = permute_factors(t, 1, 3);
  CHECK(p.at({2, 1, 0}) == 1);
  CHECK(p.entries.size() == 1);
  CHECK(permute_factors(p, 1, 3) == t);  // involutive
  CHECK_THROWS_AS(permute_factors(t, 0, 2), ShapeError);
  CHECK_THROWS_AS(permute_factors(t, 2, 2), ShapeError);
}

TEST_CASE("wedge3 equals the six-term signed sum") {
  Vec a = vec({1, 0, 0, 2});
  Vec b = vec({0, 1, -1, 0});
  Vec c = vec({3, 0, 1, 0});
  CHECK(wedge3(a, b, c) == alternating_oracle(a, b, c));
  // antisymmetry under swapping arguments
  CHECK(wedge3(b, a, c) == tensor_neg(wedge3(a, b, c)));
  CHECK(wedge3(a, c, b) == tensor_neg(wedge3(a, b, c)));
  // repeated argument kills it
  CHECK(wedge3(a, a, c).is_zero());
}

TEST_CASE("alternating_part projects and detects") {
  Vec a = vec({1, 0, 0});
  Vec b = vec({0, 1, 0});
  Vec c = vec({0, 0, 1});
  Tensor w = wedge3(a, b, c);
  auto [pw, already] = alternating_part(w);
  CHECK(already);
  CHECK(pw == w);

  Tensor t = tensor_product({a, b, c});  // not alternating
  auto [pt, alt] = alternating_part(t);
  CHECK_FALSE(alt);
  CHECK(pt == tensor_scale(frac(1, 6), w));
  // projection is idempotent
  CHECK(alternating_part(pt).second);

  Tensor sym = tensor_add(tensor_product({a, b, c}), tensor_product({b, a, c}));
  CHECK(alternating_part(sym).first.is_zero());
}

TEST_CASE("format_tensor is deterministic") {
  Tensor t(2, 2);
  t.add_entry({1, 0}, Rat(-2));
  t.add_entry({0, 1}, Rat(1));
  CHECK(format_tensor(t, {"x1", "x2"}) == "x1(x)x2 - 2*x2(x)x1");
  CHECK(format_tensor(Tensor(2, 2), {"x1", "x2"}) == "0");
}
