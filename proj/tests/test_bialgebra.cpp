#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lie3/bialgebra.hpp"
#include "lie3/errors.hpp"
#include "lie3/io.hpp"

#include <string>
#include <vector>

using namespace lie3;

namespace {

Algebra quartic() {
  Algebra a("A4", 4);
  a.set_bracket(0, 1, 2, unit_vec(4, 3));
  return a;
}

Mat witness() { return Mat::diagonal({1, 1, -1, 1}); }

Tensor apply_in_slot(const Mat& m, const Tensor& t, int slot) {
  Tensor out(t.rank, t.dim);
  for (const auto& [idx, v] : t.entries) {
    Vec img = m.column(idx[static_cast<size_t>(slot - 1)]);
    for (int r = 0; r < t.dim; ++r) {
      if (img[static_cast<size_t>(r)] == 0) continue;
      Index j = idx;
      j[static_cast<size_t>(slot - 1)] = r;
      out.add_entry(j, v * img[static_cast<size_t>(r)]);
    }
  }
  return out;
}

Tensor extend(const std::vector<Tensor>& part, const Vec& v, int dim) {
  Tensor out(3, dim);
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out = tensor_add(out, tensor_scale(v[i], part[i]));
  return out;
}

// 1-cocycle law on every ordered basis triple, with no a<b<c reduction.
bool cocycle_oracle(const Algebra& B, const std::vector<Tensor>& part, int slot) {
  int n = B.dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        Vec ea = unit_vec(n, a), eb = unit_vec(n, b), ec = unit_vec(n, c);
        Tensor lhs = extend(part, B.bracket_basis(a, b, c), n);
        Tensor rhs = tensor_add(tensor_add(apply_in_slot(ad(B, ea, eb), part[static_cast<size_t>(c)], slot),
                                           apply_in_slot(ad(B, eb, ec), part[static_cast<size_t>(a)], slot)),
                                apply_in_slot(ad(B, ec, ea), part[static_cast<size_t>(b)], slot));
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace

TEST_CASE("coadjoint representation") {
  Algebra a = quartic();
  Representation co = coadjoint(a);
  CHECK(verify_representation(a, co).pass);
  // <ad*(x1,x2) x4*, x3> = -<x4*, [x1,x2,x3]> = -1
  CHECK(co.pair(0, 1).at(2, 3) == -1);
  CHECK(co.pair(1, 0).at(2, 3) == 1);
}

TEST_CASE("semidirect product") {
  Algebra a = quartic();
  Algebra B = semidirect(a);
  CHECK(B.dim == 8);
  CHECK(B.basis[4] == "x1*");
  CHECK(B.bracket_basis(0, 1, 2) == unit_vec(8, 3));       // embedded A
  CHECK(B.bracket_basis(0, 1, 7) == -unit_vec(8, 6));      // coadjoint slot
  CHECK(is_zero(B.bracket_basis(0, 6, 7)));                // two starred args
  CHECK(verify_filippov(B).pass);
}

TEST_CASE("r from a witness") {
  Algebra a = quartic();
  Tensor r = r_from_D(a, witness());
  CHECK(r.entries.size() == 8);
  CHECK(r.at({4, 0}) == 1);   // x1* (x) Dx1
  CHECK(r.at({0, 4}) == -1);  // -Dx1 (x) x1*
  CHECK(r.at({2, 6}) == 1);   // -Dx3 (x) x3* = +x3 (x) x3*
  CHECK(permute_factors(r, 1, 2) == tensor_neg(r));
  CHECK_THROWS_AS(r_from_D(a, Mat::identity(4)), DomainError);
}

TEST_CASE("yang-baxter bracket") {
  Algebra a = quartic();
  Algebra B = semidirect(a);
  Tensor r = r_from_D(a, witness());
  CHECK(cybe_bracket(B, r, Exec::serial).is_zero());
  CHECK(cybe_bracket(B, r, Exec::parallel).is_zero());
  CHECK(verify_cybe(B, r).pass);

  // dropping the skew partner leaves a genuine non-solution
  Tensor half(2, 8);
  for (int i = 0; i < 4; ++i) half.add_entry({4 + i, i}, witness().at(i, i));
  CHECK(permute_factors(half, 1, 2) != tensor_neg(half));
  Tensor nz = cybe_bracket(B, half);
  CHECK_FALSE(nz.is_zero());
  CHECK(cybe_bracket(B, half, Exec::serial) == nz);
  Report bad = verify_cybe(B, half);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.violations.empty());
  CHECK_THROWS_AS(coproduct_from_r(B, half), DomainError);
}

TEST_CASE("the two coproduct routes agree") {
  Algebra a = quartic();
  Algebra B = semidirect(a);
  Coproduct delta = coproduct_from_r(B, r_from_D(a, witness()));
  CHECK(delta == coproduct_via_split(a, witness()));
  CHECK(wedge_normal_form(delta.total(0), B.basis) == "x4^x2*^x3*");
  CHECK(wedge_normal_form(delta.total(1), B.basis) == "-x4^x1*^x3*");
  CHECK(delta.total(3).is_zero());
  CHECK(wedge_normal_form(delta.total(7), B.basis) == "-x1*^x2*^x3*");
  CHECK_THROWS_AS(coproduct_via_split(a, Mat::identity(4)), DomainError);
}

TEST_CASE("cocycle check against the full-enumeration oracle") {
  Algebra a = quartic();
  Algebra B = semidirect(a);
  Coproduct delta = coproduct_from_r(B, r_from_D(a, witness()));
  for (int slot = 1; slot <= 3; ++slot) {
    const std::vector<Tensor>& part = slot == 1 ? delta.d1 : slot == 2 ? delta.d2 : delta.d3;
    CHECK(verify_cocycle(B, part, slot).pass);
    CHECK(cocycle_oracle(B, part, slot));
  }
  // tampering one image breaks the law in both checkers
  std::vector<Tensor> bad = delta.d1;
  bad[0] = tensor_add(bad[0], wedge3(unit_vec(8, 0), unit_vec(8, 3), unit_vec(8, 5)));
  CHECK_FALSE(verify_cocycle(B, bad, 1).pass);
  CHECK_FALSE(cocycle_oracle(B, bad, 1));
}

TEST_CASE("dual bracket") {
  Algebra a = quartic();
  Algebra B = semidirect(a);
  Coproduct delta = coproduct_from_r(B, r_from_D(a, witness()));
  Algebra dual = dual_bracket(delta);
  CHECK(dual.dim == 8);
  CHECK(verify_filippov(dual).pass);
  // Delta(x1) = x4^x2*^x3* pairs to [y4,y6,y7] = y1
  CHECK(dual.bracket_basis(3, 5, 6) == unit_vec(8, 0));

  Coproduct nonalt = delta;
  Tensor t(3, 8);
  t.add_entry({0, 1, 2}, Rat(1));
  nonalt.d1[0] = tensor_add(nonalt.d1[0], t);
  CHECK_THROWS_AS(dual_bracket(nonalt), DomainError);
}

TEST_CASE("local cocycle bialgebra aggregate") {
  Algebra a = quartic();
  Algebra B = semidirect(a);
  Coproduct delta = coproduct_from_r(B, r_from_D(a, witness()));
  CompositeReport cr = verify_local_cocycle_bialgebra(B, delta);
  CHECK(cr.pass());
  std::vector<std::string> names;
  for (const Report& p : cr.parts) names.push_back(p.check);
  CHECK(names == std::vector<std::string>{"algebra-filippov", "images-alternating", "cocycle-slot1", "cocycle-slot2",
                                          "cocycle-slot3", "dual-filippov"});

  // a tamper that leaves every image alternating and the dual a 3-Lie
  // algebra, but breaks exactly the slot-1 cocycle law
  Coproduct tampered = delta;
  tampered.d1[0] = tensor_add(tampered.d1[0], wedge3(unit_vec(8, 0), unit_vec(8, 3), unit_vec(8, 5)));
  CompositeReport bad = verify_local_cocycle_bialgebra(B, tampered);
  CHECK_FALSE(bad.pass());
  int failed = 0;
  std::string which;
  for (const Report& p : bad.parts)
    if (!p.pass) {
      ++failed;
      which = p.check;
    }
  CHECK(failed == 1);
  CHECK(which == "cocycle-slot1");
}
