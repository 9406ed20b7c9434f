#include "lie3/prelie.hpp"

#include "lie3/errors.hpp"

#include <string>

namespace lie3 {

TriProduct::TriProduct(std::string name_, int dim_) : name(std::move(name_)), dim(dim_) {
  basis.reserve(static_cast<size_t>(dim));
  for (int i = 1; i <= dim; ++i) basis.push_back("x" + std::to_string(i));
  table.assign(static_cast<size_t>(dim) * dim * dim, zero_vec(dim));
}

Vec TriProduct::product(const Vec& u, const Vec& v, const Vec& w) const {
  if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim || static_cast<int>(w.size()) != dim)
    throw ShapeError("TriProduct::product dim mismatch");
  Vec out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (u[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (v[static_cast<size_t>(j)] == 0) continue;
      Rat uv = u[static_cast<size_t>(i)] * v[static_cast<size_t>(j)];
      for (int k = 0; k < dim; ++k) {
        if (w[static_cast<size_t>(k)] == 0) continue;
        add_scaled(out, uv * w[static_cast<size_t>(k)], at(i, j, k));
      }
    }
  }
  return out;
}

namespace {
void require_involutive(const Algebra& alg, const Mat& D, const char* what) {
  Report r = verify_involutive(alg, D);
  if (!r.pass) throw DomainError(std::string(what) + " requires an involutive derivation: " + r.violations.front());
}

std::string tuple5_name(int a, int b, int c, int d, int e) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1) + "," +
         std::to_string(d + 1) + "," + std::to_string(e + 1) + ")";
}
}  // namespace

TriProduct prelie_from_D(const Algebra& alg, const Mat& D) {
  require_involutive(alg, D, "prelie_from_D");
  int n = alg.dim;
  TriProduct p(alg.name + "_preD", n);
  p.basis = alg.basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) p.at(i, j, k) = alg.bracket(D.column(i), D.column(j), unit_vec(n, k));
  return p;
}

TriProduct prelie_compatible(const Algebra& alg, const Mat& D) {
  require_involutive(alg, D, "prelie_compatible");
  int n = alg.dim;
  TriProduct p(alg.name + "_preA", n);
  p.basis = alg.basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        p.at(i, j, k) = D.apply(alg.bracket(unit_vec(n, i), unit_vec(n, j), D.column(k)));
  return p;
}

Report verify_prelie(const TriProduct& p, Exec exec) {
  Report report;
  report.check = "prelie";
  const int n = p.dim;
  // Slot-1/2 antisymmetry first; the 5-tuple identities assume it.
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (p.at(i, j, k) != -p.at(j, i, k))
          report.fail("antisymmetry fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                      std::to_string(k + 1) + ")");

  // Cyclic-sum table {x,y,z}_c used by both identities.
  std::vector<Vec> cyc(static_cast<size_t>(n) * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        cyc[(static_cast<size_t>(i) * n + j) * n + k] = p.at(i, j, k) + p.at(j, k, i) + p.at(k, i, j);
  auto cyc_at = [&](int i, int j, int k) -> const Vec& { return cyc[(static_cast<size_t>(i) * n + j) * n + k]; };

  // Contract a coefficient vector into one slot of the table.
  auto slot1 = [&](const Vec& v, int j, int k, const auto& tab) {
    Vec out = zero_vec(n);
    for (int m = 0; m < n; ++m)
      if (v[static_cast<size_t>(m)] != 0) add_scaled(out, v[static_cast<size_t>(m)], tab(m, j, k));
    return out;
  };
  auto slot2 = [&](int i, const Vec& v, int k, const auto& tab) {
    Vec out = zero_vec(n);
    for (int m = 0; m < n; ++m)
      if (v[static_cast<size_t>(m)] != 0) add_scaled(out, v[static_cast<size_t>(m)], tab(i, m, k));
    return out;
  };
  auto slot3 = [&](int i, int j, const Vec& v, const auto& tab) {
    Vec out = zero_vec(n);
    for (int m = 0; m < n; ++m)
      if (v[static_cast<size_t>(m)] != 0) add_scaled(out, v[static_cast<size_t>(m)], tab(i, j, m));
    return out;
  };
  auto raw_at = [&](int i, int j, int k) -> const Vec& { return p.at(i, j, k); };

  std::int64_t total = 1;
  for (int e = 0; e < 5; ++e) total *= n;
  std::vector<std::string> failures(static_cast<size_t>(2 * total));
  detail::parallel_for(exec, total, [&](std::int64_t t) {
    int idx[5];
    std::int64_t rest = t;
    for (int e = 4; e >= 0; --e) {
      idx[e] = static_cast<int>(rest % n);
      rest /= n;
    }
    auto [i1, i2, i3, i4, i5] = std::tuple(idx[0], idx[1], idx[2], idx[3], idx[4]);
    // (pre2): {x1,x2,{x3,x4,x5}} = {{x1,x2,x3}_c,x4,x5} + {x3,{x1,x2,x4}_c,x5} + {x3,x4,{x1,x2,x5}}
    {
      Vec lhs = slot3(i1, i2, p.at(i3, i4, i5), raw_at);
      Vec rhs = slot1(cyc_at(i1, i2, i3), i4, i5, raw_at) + slot2(i3, cyc_at(i1, i2, i4), i5, raw_at) +
                slot3(i3, i4, p.at(i1, i2, i5), raw_at);
      if (lhs != rhs) failures[static_cast<size_t>(2 * t)] = "identity 2 fails at " + tuple5_name(i1, i2, i3, i4, i5);
    }
    // (pre3): {{x1,x2,x3}_c,x4,x5} = {x1,x2,{x3,x4,x5}} + {x2,x3,{x1,x4,x5}} + {x3,x1,{x2,x4,x5}}
    {
      Vec lhs = slot1(cyc_at(i1, i2, i3), i4, i5, raw_at);
      Vec rhs = slot3(i1, i2, p.at(i3, i4, i5), raw_at) + slot3(i2, i3, p.at(i1, i4, i5), raw_at) +
                slot3(i3, i1, p.at(i2, i4, i5), raw_at);
      if (lhs != rhs)
        failures[static_cast<size_t>(2 * t + 1)] = "identity 3 fails at " + tuple5_name(i1, i2, i3, i4, i5);
    }
  });
  for (const std::string& f : failures)
    if (!f.empty()) report.fail(f);
  return report;
}

Algebra subadjacent(const TriProduct& p) {
  Report pr = verify_prelie(p);
  if (!pr.pass) throw DomainError("subadjacent requires a 3-pre-Lie product: " + pr.violations.front());
  int n = p.dim;
  Algebra alg(p.name + "_c", n);
  alg.basis = p.basis;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        alg.set_bracket(i, j, k, p.at(i, j, k) + p.at(j, k, i) + p.at(k, i, j));
  return alg;
}

Report verify_D_isomorphism(const Algebra& alg, const Mat& D) {
  require_involutive(alg, D, "verify_D_isomorphism");
  Report report;
  report.check = "d-isomorphism";
  int n = alg.dim;
  TriProduct p = prelie_from_D(alg, D);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec dc = p.at(i, j, k) + p.at(j, k, i) + p.at(k, i, j);
        Vec ddd = alg.bracket(D.column(i), D.column(j), D.column(k));
        std::string tuple = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                            std::to_string(k + 1) + ")";
        if (dc != D.apply(ddd))
          report.fail("bracket formula fails at " + tuple + ": {x,y,z}_Dc = " + format_combo(dc, alg.basis) +
                      ", D[Dx,Dy,Dz] = " + format_combo(D.apply(ddd), alg.basis));
        if (D.apply(dc) != ddd)
          report.fail("isomorphism fails at " + tuple + ": D{x,y,z}_Dc = " + format_combo(D.apply(dc), alg.basis) +
                      ", [Dx,Dy,Dz] = " + format_combo(ddd, alg.basis));
      }
  return report;
}

Report piecewise_check(const Algebra& alg, const Mat& D) {
  EigenSplit split = eigensplit(alg, D);  // validates involutivity
  int n = alg.dim;
  std::vector<int> sign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    Vec e = unit_vec(n, i);
    if (split.plus.contains(e))
      sign[static_cast<size_t>(i)] = 1;
    else if (split.minus.contains(e))
      sign[static_cast<size_t>(i)] = -1;
    else
      throw DomainError("piecewise_check: basis vector x" + std::to_string(i + 1) +
                        " lies in neither eigenspace (D is not diagonal in this basis)");
  }
  Report report;
  report.check = "piecewise";
  TriProduct p = prelie_from_D(alg, D);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        int si = sign[static_cast<size_t>(i)], sj = sign[static_cast<size_t>(j)], sk = sign[static_cast<size_t>(k)];
        bool all_same = si == sj && sj == sk;
        Vec br = alg.bracket_basis(i, j, k);
        Vec expect_d = all_same ? zero_vec(n) : (si * sj > 0 ? br : -br);
        Vec expect_dc = all_same ? zero_vec(n) : -br;
        Vec got_d = p.at(i, j, k);
        Vec got_dc = p.at(i, j, k) + p.at(j, k, i) + p.at(k, i, j);
        std::string tuple = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                            std::to_string(k + 1) + ")";
        if (got_d != expect_d)
          report.fail("{,,}_D case table fails at " + tuple + ": got " + format_combo(got_d, alg.basis) +
                      ", case value " + format_combo(expect_d, alg.basis));
        if (got_dc != expect_dc)
          report.fail("{,,}_Dc case table fails at " + tuple + ": got " + format_combo(got_dc, alg.basis) +
                      ", case value " + format_combo(expect_dc, alg.basis));
      }
  return report;
}

}  // namespace lie3
