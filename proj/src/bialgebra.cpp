#include "lie3/bialgebra.hpp"

#include "lie3/errors.hpp"

#include <string>
#include <tuple>

namespace lie3 {

namespace {
// One u (x) v term of a rank-2 tensor.
struct Monomial {
  Rat coeff;
  int u, v;
};

std::vector<Monomial> monomials(const Tensor& r) {
  if (r.rank != 2) throw ShapeError("expected a rank-2 tensor");
  std::vector<Monomial> out;
  out.reserve(r.entries.size());
  for (const auto& [idx, c] : r.entries) out.push_back({c, idx[0], idx[1]});
  return out;
}

std::string coord_name(const Index& idx, const std::vector<std::string>& labels) {
  std::string s = "(";
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ",";
    s += labels[static_cast<size_t>(idx[i])];
  }
  return s + ")";
}
}  // namespace

Representation coadjoint(const Algebra& alg) {
  Representation rep;
  rep.alg_dim = alg.dim;
  rep.mod_dim = alg.dim;
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i + 1; j < alg.dim; ++j) {
      Mat m = -ad(alg, unit_vec(alg.dim, i), unit_vec(alg.dim, j)).transpose();
      if (!m.is_zero()) rep.set(i, j, std::move(m));
    }
  return rep;
}

Algebra semidirect(const Algebra& alg) {
  int n = alg.dim;
  Algebra b(alg.name + "_sd", 2 * n);
  for (int i = 0; i < n; ++i) {
    b.basis[static_cast<size_t>(i)] = alg.basis[static_cast<size_t>(i)];
    b.basis[static_cast<size_t>(n + i)] = alg.basis[static_cast<size_t>(i)] + "*";
  }
  for (const auto& [key, value] : alg.c) {
    Vec v = zero_vec(2 * n);
    for (int r = 0; r < n; ++r) v[static_cast<size_t>(r)] = value[static_cast<size_t>(r)];
    b.set_bracket(key[0], key[1], key[2], std::move(v));
  }
  Representation star = coadjoint(alg);
  for (const auto& [key, m] : star.rho)
    for (int col = 0; col < n; ++col) {
      Vec v = zero_vec(2 * n);
      bool nonzero = false;
      for (int r = 0; r < n; ++r) {
        v[static_cast<size_t>(n + r)] = m.at(r, col);
        nonzero = nonzero || m.at(r, col) != 0;
      }
      if (nonzero) b.set_bracket(key.first, key.second, n + col, std::move(v));
    }
  return b;
}

Tensor r_from_D(const Algebra& alg, const Mat& D) {
  Report inv = verify_involutive(alg, D);
  if (!inv.pass) throw DomainError("r_from_D requires an involutive derivation: " + inv.violations.front());
  int n = alg.dim;
  Tensor r(2, 2 * n);
  for (int i = 0; i < n; ++i)
    for (int m = 0; m < n; ++m) {
      const Rat& d = D.at(m, i);
      if (d == 0) continue;
      r.add_entry({n + i, m}, d);   // x_i* (x) Dx_i
      r.add_entry({m, n + i}, -d);  // -Dx_i (x) x_i*
    }
  return r;
}

Tensor cybe_bracket(const Algebra& B, const Tensor& r, Exec exec) {
  if (r.dim != B.dim) throw ShapeError("cybe_bracket: r lives on a different space than B");
  std::vector<Monomial> mono = monomials(r);
  std::int64_t m = static_cast<std::int64_t>(mono.size());
  std::vector<Tensor> partial(static_cast<size_t>(m * m * m), Tensor(4, B.dim));
  detail::parallel_for(exec, m * m * m, [&](std::int64_t t) {
    const Monomial& m1 = mono[static_cast<size_t>(t / (m * m))];
    const Monomial& m2 = mono[static_cast<size_t>((t / m) % m)];
    const Monomial& m3 = mono[static_cast<size_t>(t % m)];
    Rat coeff = m1.coeff * m2.coeff * m3.coeff;
    Tensor& out = partial[static_cast<size_t>(t)];
    auto add = [&](const Vec& br, int slot, int f1, int f2, int f3) {
      Index idx{0, 0, 0, 0};
      int rest[3] = {f1, f2, f3};
      for (int p = 0, q = 0; p < 4; ++p)
        if (p != slot) idx[static_cast<size_t>(p)] = rest[q++];
      for (int w = 0; w < B.dim; ++w) {
        if (br[static_cast<size_t>(w)] == 0) continue;
        idx[static_cast<size_t>(slot)] = w;
        out.add_entry(idx, coeff * br[static_cast<size_t>(w)]);
      }
    };
    add(B.bracket_basis(m1.u, m2.u, m3.u), 0, m1.v, m2.v, m3.v);
    add(B.bracket_basis(m1.v, m2.u, m3.u), 1, m1.u, m2.v, m3.v);
    add(B.bracket_basis(m1.v, m2.v, m3.u), 2, m1.u, m2.u, m3.v);
    add(B.bracket_basis(m1.v, m2.v, m3.v), 3, m1.u, m2.u, m3.u);
  });
  Tensor total(4, B.dim);
  for (const Tensor& p : partial) total = tensor_add(total, p);
  return total;
}

Report verify_cybe(const Algebra& B, const Tensor& r, Exec exec) {
  Report report;
  report.check = "cybe";
  Tensor t = cybe_bracket(B, r, exec);
  int shown = 0;
  for (const auto& [idx, v] : t.entries) {
    if (shown == 10) break;
    report.fail("[[r,r,r]] coordinate " + coord_name(idx, B.basis) + " = " + to_string(v));
    ++shown;
  }
  return report;
}

Coproduct coproduct_from_r(const Algebra& B, const Tensor& r) {
  if (r.dim != B.dim) throw ShapeError("coproduct_from_r: r lives on a different space than B");
  if (permute_factors(r, 1, 2) != tensor_neg(r)) throw DomainError("coproduct_from_r requires skew-symmetric r");
  if (!verify_cybe(B, r).pass) throw DomainError("coproduct_from_r requires r to solve the CYBE");
  std::vector<Monomial> mono = monomials(r);
  Coproduct delta(B.dim);
  for (int x = 0; x < B.dim; ++x) {
    Tensor& t = delta.d1[static_cast<size_t>(x)];
    for (const Monomial& mi : mono)
      for (const Monomial& mj : mono) {
        Vec br = B.bracket_basis(x, mi.u, mj.u);
        Rat coeff = mi.coeff * mj.coeff;
        for (int w = 0; w < B.dim; ++w)
          if (br[static_cast<size_t>(w)] != 0) t.add_entry({w, mj.v, mi.v}, coeff * br[static_cast<size_t>(w)]);
      }
    delta.d2[static_cast<size_t>(x)] = permute_factors(permute_factors(t, 1, 2), 1, 3);
    delta.d3[static_cast<size_t>(x)] = permute_factors(permute_factors(t, 1, 3), 1, 2);
  }
  return delta;
}

Coproduct coproduct_via_split(const Algebra& alg, const Mat& D) {
  Report inv = verify_involutive(alg, D);
  if (!inv.pass) throw DomainError("coproduct_via_split requires an involutive derivation: " + inv.violations.front());
  int n = alg.dim;
  std::vector<int> eps(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Vec col = D.column(i);
    if (col == unit_vec(n, i))
      eps[static_cast<size_t>(i)] = 1;
    else if (col == -unit_vec(n, i))
      eps[static_cast<size_t>(i)] = -1;
    else
      throw DomainError("coproduct_via_split requires a diagonal +-1 derivation; basis vector x" +
                        std::to_string(i + 1) + " is not an eigenvector");
  }
  Algebra B = semidirect(alg);
  Coproduct delta(B.dim);
  for (int x = 0; x < B.dim; ++x) {
    Tensor& t = delta.d1[static_cast<size_t>(x)];
    auto accumulate = [&](const Vec& br, const Rat& coeff, int f2, int f3) {
      for (int w = 0; w < B.dim; ++w)
        if (br[static_cast<size_t>(w)] != 0) t.add_entry({w, f2, f3}, coeff * br[static_cast<size_t>(w)]);
    };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Rat si(eps[static_cast<size_t>(i)]), sj(eps[static_cast<size_t>(j)]);
        // mu(x, x_i*, -e_j x_j) (x) x_j* (x) e_i x_i
        accumulate(B.bracket_basis(x, n + i, j), -sj * si, n + j, i);
        // mu(x, -e_i x_i, x_j*) (x) e_j x_j (x) x_i*
        accumulate(B.bracket_basis(x, i, n + j), -si * sj, j, n + i);
        // mu(x, e_i x_i, e_j x_j) (x) x_j* (x) x_i*
        accumulate(B.bracket_basis(x, i, j), si * sj, n + j, n + i);
      }
    delta.d2[static_cast<size_t>(x)] = permute_factors(permute_factors(t, 1, 2), 1, 3);
    delta.d3[static_cast<size_t>(x)] = permute_factors(permute_factors(t, 1, 3), 1, 2);
  }
  return delta;
}

Report verify_cocycle(const Algebra& B, const std::vector<Tensor>& part, int slot) {
  if (slot < 1 || slot > 3) throw ShapeError("verify_cocycle slot must be 1, 2 or 3");
  if (static_cast<int>(part.size()) != B.dim) throw ShapeError("verify_cocycle: coproduct dim mismatch");
  Report report;
  report.check = "cocycle-slot" + std::to_string(slot);
  int n = B.dim;
  // ad(x_a, x_b) acting in one factor of a rank-3 tensor.
  auto act = [&](int a, int b, const Tensor& t) {
    Tensor out(3, n);
    for (const auto& [idx, v] : t.entries) {
      Vec img = B.bracket_basis(a, b, idx[static_cast<size_t>(slot - 1)]);
      Index j = idx;
      for (int w = 0; w < n; ++w) {
        if (img[static_cast<size_t>(w)] == 0) continue;
        j[static_cast<size_t>(slot - 1)] = w;
        out.add_entry(j, v * img[static_cast<size_t>(w)]);
      }
    }
    return out;
  };
  auto delta_of = [&](const Vec& v) {
    Tensor out(3, n);
    for (int m = 0; m < n; ++m)
      if (v[static_cast<size_t>(m)] != 0)
        out = tensor_add(out, tensor_scale(v[static_cast<size_t>(m)], part[static_cast<size_t>(m)]));
    return out;
  };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Tensor lhs = delta_of(B.bracket_basis(a, b, c));
        Tensor rhs = tensor_add(tensor_add(act(a, b, part[static_cast<size_t>(c)]), act(b, c, part[static_cast<size_t>(a)])),
                                act(c, a, part[static_cast<size_t>(b)]));
        if (!(lhs == rhs))
          report.fail("triple (" + B.basis[static_cast<size_t>(a)] + "," + B.basis[static_cast<size_t>(b)] + "," +
                      B.basis[static_cast<size_t>(c)] + "): lhs " + format_tensor(lhs, B.basis) + ", rhs " +
                      format_tensor(rhs, B.basis));
      }
  return report;
}

Algebra dual_bracket(const Coproduct& delta) {
  int n = delta.dim;
  Algebra dual("dual", n);
  for (int i = 0; i < n; ++i) dual.basis[static_cast<size_t>(i)] = "y" + std::to_string(i + 1);
  std::vector<Tensor> images;
  images.reserve(static_cast<size_t>(n));
  for (int d = 0; d < n; ++d) {
    Tensor t = delta.total(d);
    if (!alternating_part(t).second)
      throw DomainError("dual_bracket: coproduct image of basis vector " + std::to_string(d + 1) +
                        " is not alternating");
    images.push_back(std::move(t));
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        Vec v = zero_vec(n);
        for (int d = 0; d < n; ++d) v[static_cast<size_t>(d)] = images[static_cast<size_t>(d)].at({a, b, c});
        dual.set_bracket(a, b, c, std::move(v));
      }
  return dual;
}

CompositeReport verify_local_cocycle_bialgebra(const Algebra& B, const Coproduct& delta) {
  if (delta.dim != B.dim) throw ShapeError("verify_local_cocycle_bialgebra: coproduct dim mismatch");
  CompositeReport out;
  out.check = "local-cocycle-bialgebra";
  Report fil = verify_filippov(B);
  fil.check = "algebra-filippov";
  out.parts.push_back(std::move(fil));

  Report alt;
  alt.check = "images-alternating";
  for (int d = 0; d < B.dim; ++d)
    if (!alternating_part(delta.total(d)).second)
      alt.fail("image of " + B.basis[static_cast<size_t>(d)] + " is not alternating");
  bool images_ok = alt.pass;
  out.parts.push_back(std::move(alt));

  const std::vector<Tensor>* parts[3] = {&delta.d1, &delta.d2, &delta.d3};
  for (int slot = 1; slot <= 3; ++slot) out.parts.push_back(verify_cocycle(B, *parts[slot - 1], slot));

  Report dual;
  dual.check = "dual-filippov";
  if (images_ok) {
    dual = verify_filippov(dual_bracket(delta));
    dual.check = "dual-filippov";
  } else {
    dual.fail("skipped: images are not alternating");
  }
  out.parts.push_back(std::move(dual));
  return out;
}

}  // namespace lie3
