#include "lie3/derivation.hpp"

#include "lie3/errors.hpp"

#include <string>

namespace lie3 {

namespace {
void check_square(const Algebra& alg, const Mat& D, const char* what) {
  if (D.rows() != alg.dim || D.cols() != alg.dim)
    throw ShapeError(std::string(what) + ": map is " + std::to_string(D.rows()) + "x" + std::to_string(D.cols()) +
                     " on a dim-" + std::to_string(alg.dim) + " algebra");
}

std::string triple_name(int i, int j, int k) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}
}  // namespace

Report verify_derivation(const Algebra& alg, const Mat& D) {
  check_square(alg, D, "verify_derivation");
  Report report;
  report.check = "derivation";
  int n = alg.dim;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec lhs = D.apply(alg.bracket_basis(i, j, k));
        Vec rhs = alg.bracket(D.column(i), unit_vec(n, j), unit_vec(n, k)) +
                  alg.bracket(unit_vec(n, i), D.column(j), unit_vec(n, k)) +
                  alg.bracket(unit_vec(n, i), unit_vec(n, j), D.column(k));
        if (lhs != rhs)
          report.fail("triple " + triple_name(i, j, k) + ": D[x,y,z] = " + format_combo(lhs, alg.basis) +
                      ", Leibniz sum = " + format_combo(rhs, alg.basis));
      }
  return report;
}

std::vector<Mat> derivation_space(const Algebra& alg) {
  int n = alg.dim;
  // Unknowns d_{l,m} (row l, column m of D), flattened as l*n + m.
  // One block of n equations per ordered triple i<j<k.
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) triples.push_back({i, j, k});
  Mat system(static_cast<int>(triples.size()) * n, n * n);
  for (size_t t = 0; t < triples.size(); ++t) {
    auto [i, j, k] = triples[t];
    Vec b = alg.bracket_basis(i, j, k);
    for (int m = 0; m < n; ++m) {
      // LHS contribution: D applied to [x_i,x_j,x_k] uses d_{r,m} b_m.
      for (int r = 0; r < n; ++r)
        system.at(static_cast<int>(t) * n + r, r * n + m) += b[static_cast<size_t>(m)];
      // RHS contributions: replacing slot argument a by x_m weighted d_{m,a}.
      auto subtract_slot = [&](int a, const Vec& img) {
        for (int r = 0; r < n; ++r)
          system.at(static_cast<int>(t) * n + r, m * n + a) -= img[static_cast<size_t>(r)];
      };
      subtract_slot(i, alg.bracket_basis(m, j, k));
      subtract_slot(j, alg.bracket_basis(i, m, k));
      subtract_slot(k, alg.bracket_basis(i, j, m));
    }
  }
  std::vector<Vec> kernel = nullspace(system);
  std::vector<Mat> out;
  out.reserve(kernel.size());
  for (const Vec& v : kernel) {
    Mat d(n, n);
    for (int r = 0; r < n; ++r)
      for (int m = 0; m < n; ++m) d.at(r, m) = v[static_cast<size_t>(r * n + m)];
    out.push_back(std::move(d));
  }
  return out;
}

Report verify_involutive(const Algebra& alg, const Mat& D) {
  check_square(alg, D, "verify_involutive");
  Report report = verify_derivation(alg, D);
  report.check = "involutive";
  if (!(D * D).is_identity()) report.fail("D*D is not the identity matrix");
  return report;
}

EigenSplit eigensplit(const Algebra& alg, const Mat& D) {
  Report inv = verify_involutive(alg, D);
  if (!inv.pass) throw DomainError("eigensplit requires an involutive derivation: " + inv.violations.front());
  int n = alg.dim;
  Mat minus_i = D - Mat::identity(n);
  Mat plus_i = D + Mat::identity(n);
  EigenSplit split;
  split.plus.ambient = n;
  split.plus.basis = nullspace(minus_i);
  split.minus.ambient = n;
  split.minus.basis = nullspace(plus_i);
  if (split.plus.dim() + split.minus.dim() != n)
    throw DomainError("eigensplit: eigenspace dimensions do not sum to dim A");
  for (const Subspace* part : {&split.plus, &split.minus}) {
    size_t m = part->basis.size();
    for (size_t a = 0; a < m; ++a)
      for (size_t b = a + 1; b < m; ++b)
        for (size_t c = b + 1; c < m; ++c)
          if (!is_zero(alg.bracket(part->basis[a], part->basis[b], part->basis[c])))
            throw DomainError("eigensplit: eigenspace is not an abelian subalgebra");
  }
  return split;
}

Report verify_dd_identity(const Algebra& alg, const Mat& D) {
  check_square(alg, D, "verify_dd_identity");
  Report report;
  report.check = "dd-identity";
  int n = alg.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Vec dx = D.column(i), dy = D.column(j), dz = D.column(k);
        Vec x = unit_vec(n, i), y = unit_vec(n, j), z = unit_vec(n, k);
        Vec lhs = alg.bracket(dx, dy, dz);
        Vec rhs = D.apply(alg.bracket(dx, dy, z) + alg.bracket(dy, dz, x) + alg.bracket(dz, dx, y));
        if (lhs != rhs)
          report.fail("triple " + triple_name(i, j, k) + ": [Dx,Dy,Dz] = " + format_combo(lhs, alg.basis) +
                      ", D(sum) = " + format_combo(rhs, alg.basis));
      }
  return report;
}

std::vector<Mat> search_involutive_diagonal(const Algebra& alg) {
  int n = alg.dim;
  if (n > 24) throw CapacityError("diagonal involutive search capped at dim 24, got " + std::to_string(n));
  std::vector<Mat> out;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<int> signs(static_cast<size_t>(n));
    // Bit (n-1-pos) encodes position pos; 0 -> +1. This makes ascending
    // masks enumerate sign patterns lexicographically with +1 before -1.
    for (int pos = 0; pos < n; ++pos) signs[static_cast<size_t>(pos)] = (mask >> (n - 1 - pos)) & 1u ? -1 : 1;
    Mat d = Mat::diagonal(signs);
    if (verify_derivation(alg, d).pass) out.push_back(std::move(d));
  }
  return out;
}

}  // namespace lie3
