#include "lie3/algebra.hpp"

#include "lie3/errors.hpp"

#include <algorithm>

namespace lie3 {

Algebra::Algebra(std::string name_, int dim_) : name(std::move(name_)), dim(dim_) {
  basis.reserve(static_cast<size_t>(dim));
  for (int i = 1; i <= dim; ++i) basis.push_back("x" + std::to_string(i));
}

void Algebra::set_bracket(int i, int j, int k, Vec value) {
  if (!(0 <= i && i < j && j < k && k < dim)) throw ShapeError("set_bracket requires 0 <= i < j < k < dim");
  if (static_cast<int>(value.size()) != dim) throw ShapeError("set_bracket value dim mismatch");
  std::array<int, 3> key{i, j, k};
  if (is_zero(value))
    c.erase(key);
  else
    c[key] = std::move(value);
}

namespace {
// Sorts three indices, returns the permutation sign, or 0 on a repeat.
int sort3(int& i, int& j, int& k) {
  int sign = 1;
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (j > k) { std::swap(j, k); sign = -sign; }
  if (i > j) { std::swap(i, j); sign = -sign; }
  if (i == j || j == k) return 0;
  return sign;
}

// Dense lookup table: pointer to the stored coefficient vector of the
// sorted triple plus the permutation sign. Null pointer means zero.
struct BracketTable {
  int n;
  std::vector<const Vec*> ptr;  // n^3
  std::vector<int> sign;        // n^3

  explicit BracketTable(const Algebra& alg) : n(alg.dim) {
    size_t total = static_cast<size_t>(n) * n * n;
    ptr.assign(total, nullptr);
    sign.assign(total, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          int a = i, b = j, cc = k;
          int s = sort3(a, b, cc);
          if (s == 0) continue;
          auto it = alg.c.find({a, b, cc});
          if (it == alg.c.end()) continue;
          size_t at = (static_cast<size_t>(i) * n + j) * n + k;
          ptr[at] = &it->second;
          sign[at] = s;
        }
  }

  void add_bracket(Vec& acc, const Rat& coeff, int i, int j, int k) const {
    size_t at = (static_cast<size_t>(i) * n + j) * n + k;
    const Vec* v = ptr[at];
    if (!v || coeff == 0) return;
    if (sign[at] > 0)
      add_scaled(acc, coeff, *v);
    else
      add_scaled(acc, -coeff, *v);
  }
};
}  // namespace

Vec Algebra::bracket_basis(int i, int j, int k) const {
  if (i < 0 || j < 0 || k < 0 || i >= dim || j >= dim || k >= dim)
    throw ShapeError("bracket_basis index out of range");
  int s = sort3(i, j, k);
  if (s == 0) return zero_vec(dim);
  auto it = c.find({i, j, k});
  if (it == c.end()) return zero_vec(dim);
  return s > 0 ? it->second : -it->second;
}

Vec Algebra::bracket(const Vec& u, const Vec& v, const Vec& w) const {
  if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim || static_cast<int>(w.size()) != dim)
    throw ShapeError("bracket argument dim mismatch");
  Vec out = zero_vec(dim);
  for (const auto& [key, value] : c) {
    auto [i, j, k] = key;
    // 3x3 minor of the coordinate rows at columns i,j,k.
    Rat det = u[static_cast<size_t>(i)] * (v[static_cast<size_t>(j)] * w[static_cast<size_t>(k)] - v[static_cast<size_t>(k)] * w[static_cast<size_t>(j)]) -
              u[static_cast<size_t>(j)] * (v[static_cast<size_t>(i)] * w[static_cast<size_t>(k)] - v[static_cast<size_t>(k)] * w[static_cast<size_t>(i)]) +
              u[static_cast<size_t>(k)] * (v[static_cast<size_t>(i)] * w[static_cast<size_t>(j)] - v[static_cast<size_t>(j)] * w[static_cast<size_t>(i)]);
    add_scaled(out, det, value);
  }
  return out;
}

Algebra abelian_algebra(int dim) { return Algebra("abelian" + std::to_string(dim), dim); }

void Representation::set(int i, int j, Mat m) {
  if (!(0 <= i && i < j && j < alg_dim)) throw ShapeError("Representation::set requires i < j");
  if (m.rows() != mod_dim || m.cols() != mod_dim) throw ShapeError("Representation::set matrix shape mismatch");
  if (m.is_zero())
    rho.erase({i, j});
  else
    rho[{i, j}] = std::move(m);
}

Mat Representation::pair(int i, int j) const {
  if (i == j) return Mat(mod_dim, mod_dim);
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = rho.find({i, j});
  if (it == rho.end()) return Mat(mod_dim, mod_dim);
  return flip ? -it->second : it->second;
}

Mat Representation::of(const Vec& u, const Vec& v) const {
  Mat out(mod_dim, mod_dim);
  for (const auto& [key, m] : rho) {
    Rat coeff = u[static_cast<size_t>(key.first)] * v[static_cast<size_t>(key.second)] -
                u[static_cast<size_t>(key.second)] * v[static_cast<size_t>(key.first)];
    if (coeff == 0) continue;
    for (int r = 0; r < mod_dim; ++r)
      for (int c2 = 0; c2 < mod_dim; ++c2) out.at(r, c2) += coeff * m.at(r, c2);
  }
  return out;
}

Mat ad(const Algebra& alg, const Vec& u, const Vec& v) {
  Mat m(alg.dim, alg.dim);
  for (int k = 0; k < alg.dim; ++k) {
    Vec img = alg.bracket(u, v, unit_vec(alg.dim, k));
    for (int r = 0; r < alg.dim; ++r) m.at(r, k) = img[static_cast<size_t>(r)];
  }
  return m;
}

Representation adjoint_rep(const Algebra& alg) {
  Representation rep;
  rep.alg_dim = alg.dim;
  rep.mod_dim = alg.dim;
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i + 1; j < alg.dim; ++j) {
      Mat m(alg.dim, alg.dim);
      bool nonzero = false;
      for (int k = 0; k < alg.dim; ++k) {
        Vec img = alg.bracket_basis(i, j, k);
        for (int r = 0; r < alg.dim; ++r) {
          m.at(r, k) = img[static_cast<size_t>(r)];
          nonzero = nonzero || img[static_cast<size_t>(r)] != 0;
        }
      }
      if (nonzero) rep.set(i, j, std::move(m));
    }
  return rep;
}

Report verify_filippov(const Algebra& alg, Exec exec) {
  Report report;
  report.check = "filippov";
  const int n = alg.dim;
  BracketTable table(alg);

  // Tuples (i1<i2, i3<i4<i5), flattened in lexicographic order.
  std::vector<std::array<int, 5>> tuples;
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = i1 + 1; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3)
        for (int i4 = i3 + 1; i4 < n; ++i4)
          for (int i5 = i4 + 1; i5 < n; ++i5) tuples.push_back({i1, i2, i3, i4, i5});

  std::vector<std::string> failures(tuples.size());
  detail::parallel_for(exec, static_cast<std::int64_t>(tuples.size()), [&](std::int64_t t) {
    auto [i1, i2, i3, i4, i5] = tuples[static_cast<size_t>(t)];
    // LHS = [x1, x2, [x3, x4, x5]]
    Vec lhs = zero_vec(n);
    {
      size_t at = (static_cast<size_t>(i3) * n + i4) * n + i5;
      const Vec* inner = table.ptr[at];
      if (inner)
        for (int m = 0; m < n; ++m) table.add_bracket(lhs, (*inner)[static_cast<size_t>(m)], i1, i2, m);
    }
    // RHS = [[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]]
    Vec rhs = zero_vec(n);
    auto add_term = [&](int a, int pos1, int pos2, bool inner_first) {
      size_t at = (static_cast<size_t>(i1) * n + i2) * n + a;
      const Vec* inner = table.ptr[at];
      if (!inner) return;
      int s = table.sign[at];
      for (int m = 0; m < n; ++m) {
        Rat coeff = (*inner)[static_cast<size_t>(m)];
        if (s < 0) coeff = -coeff;
        if (inner_first)
          table.add_bracket(rhs, coeff, m, pos1, pos2);
        else
          table.add_bracket(rhs, coeff, pos1, m, pos2);
      }
    };
    add_term(i3, i4, i5, true);   // [[x1,x2,x3], x4, x5]
    add_term(i4, i3, i5, false);  // [x3, [x1,x2,x4], x5]
    // [x3, x4, [x1,x2,x5]]
    {
      size_t at = (static_cast<size_t>(i1) * n + i2) * n + i5;
      const Vec* inner = table.ptr[at];
      if (inner) {
        int s = table.sign[at];
        for (int m = 0; m < n; ++m) {
          Rat coeff = (*inner)[static_cast<size_t>(m)];
          if (s < 0) coeff = -coeff;
          table.add_bracket(rhs, coeff, i3, i4, m);
        }
      }
    }
    if (lhs != rhs) {
      failures[static_cast<size_t>(t)] =
          "tuple (" + std::to_string(i1 + 1) + "," + std::to_string(i2 + 1) + "," + std::to_string(i3 + 1) + "," +
          std::to_string(i4 + 1) + "," + std::to_string(i5 + 1) + "): lhs = " + format_combo(lhs, alg.basis) +
          ", rhs = " + format_combo(rhs, alg.basis);
    }
  });
  for (const std::string& f : failures)
    if (!f.empty()) report.fail(f);
  return report;
}

Subspace derived_algebra(const Algebra& alg) {
  std::vector<Vec> gens;
  for (const auto& [key, value] : alg.c) gens.push_back(value);
  Subspace current = span(alg.dim, gens);
  // Close under the bracket among its own elements to a fixpoint.
  for (;;) {
    std::vector<Vec> next = current.basis;
    bool grew = false;
    size_t m = current.basis.size();
    for (size_t a = 0; a < m; ++a)
      for (size_t b = a + 1; b < m; ++b)
        for (size_t d = b + 1; d < m; ++d) {
          Vec v = alg.bracket(current.basis[a], current.basis[b], current.basis[d]);
          if (!is_zero(v) && !current.contains(v)) {
            next.push_back(std::move(v));
            grew = true;
          }
        }
    if (!grew) return current;
    current = span(alg.dim, next);
  }
}

Subspace center(const Algebra& alg) {
  // Stack the maps v -> [v, x_i, x_j] over all i<j into one matrix.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < alg.dim; ++i)
    for (int j = i + 1; j < alg.dim; ++j) pairs.emplace_back(i, j);
  Mat stacked(alg.dim * static_cast<int>(pairs.size()), alg.dim);
  for (size_t p = 0; p < pairs.size(); ++p)
    for (int k = 0; k < alg.dim; ++k) {
      Vec img = alg.bracket_basis(k, pairs[p].first, pairs[p].second);
      for (int r = 0; r < alg.dim; ++r) stacked.at(static_cast<int>(p) * alg.dim + r, k) = img[static_cast<size_t>(r)];
    }
  Subspace s;
  s.ambient = alg.dim;
  s.basis = nullspace(stacked);
  return s;
}

Report verify_representation(const Algebra& alg, const Representation& rep) {
  Report report;
  report.check = "representation";
  if (rep.alg_dim != alg.dim) throw ShapeError("representation built over a different algebra dimension");
  int n = alg.dim;
  auto rho_of = [&](const Vec& u, const Vec& v) { return rep.of(u, v); };
  for (int i1 = 0; i1 < n; ++i1)
    for (int i2 = i1 + 1; i2 < n; ++i2)
      for (int i3 = 0; i3 < n; ++i3)
        for (int i4 = 0; i4 < n; ++i4) {
          Mat r12 = rep.pair(i1, i2);
          Mat r34 = rep.pair(i3, i4);
          Mat commutator = r12 * r34 - r34 * r12;
          Vec b123 = alg.bracket_basis(i1, i2, i3);
          Vec b124 = alg.bracket_basis(i1, i2, i4);
          Mat rhs1 = rho_of(b123, unit_vec(n, i4)) - rho_of(b124, unit_vec(n, i3));
          std::string tuple = "(" + std::to_string(i1 + 1) + "," + std::to_string(i2 + 1) + "," +
                              std::to_string(i3 + 1) + "," + std::to_string(i4 + 1) + ")";
          if (!(commutator == rhs1)) report.fail("axiom 1 fails at " + tuple);
          Mat lhs2 = rho_of(b123, unit_vec(n, i4));
          Mat rhs2 = r12 * rep.pair(i3, i4) + rep.pair(i2, i3) * rep.pair(i1, i4) + rep.pair(i3, i1) * rep.pair(i2, i4);
          if (!(lhs2 == rhs2)) report.fail("axiom 2 fails at " + tuple);
        }
  return report;
}

Report verify_o_operator(const Algebra& alg, const Representation& rep, const Mat& T) {
  Report report;
  report.check = "o-operator";
  if (T.rows() != alg.dim || T.cols() != rep.mod_dim)
    throw ShapeError("o-operator T must map the module into the algebra");
  int m = rep.mod_dim;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int cc = 0; cc < m; ++cc) {
        Vec Tu = T.column(a), Tv = T.column(b), Tw = T.column(cc);
        Vec lhs = alg.bracket(Tu, Tv, Tw);
        Vec inner = rep.of(Tu, Tv).apply(unit_vec(m, cc)) + rep.of(Tv, Tw).apply(unit_vec(m, a)) +
                    rep.of(Tw, Tu).apply(unit_vec(m, b));
        Vec rhs = T.apply(inner);
        if (lhs != rhs)
          report.fail("triple (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "," +
                      std::to_string(cc + 1) + "): lhs = " + format_combo(lhs, alg.basis) +
                      ", rhs = " + format_combo(rhs, alg.basis));
      }
  return report;
}

}  // namespace lie3
