#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lie3/derivation.hpp"
#include "lie3/errors.hpp"

using namespace lie3;

namespace {

// [x1,x2,x3] = x4. Diagonal derivations are diag(d1,d2,d3,d1+d2+d3).
Algebra quartic() {
  Algebra a("A4", 4);
  a.set_bracket(0, 1, 2, unit_vec(4, 3));
  return a;
}

}  // namespace

TEST_CASE("derivation law") {
  Algebra a = quartic();
  CHECK(verify_derivation(a, Mat::diagonal({1, 1, -1, 1})).pass);
  CHECK(verify_derivation(a, Mat(4, 4)).pass);  // zero map
  Mat scaled = Mat::diagonal({1, 1, 1, 1});
  scaled.at(3, 3) = Rat(3);
  CHECK(verify_derivation(a, scaled).pass);  // diag(1,1,1,3)
  Report bad = verify_derivation(a, Mat::identity(4));
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.violations.empty());
}

TEST_CASE("derivation space") {
  // hand count for [x1,x2,x3]=x4: free 3x3 block (9), free row x4 over
  // x1..x3 (3), column 4 pinned to a44 = a11+a22+a33 -> dim 12
  Algebra a = quartic();
  std::vector<Mat> der = derivation_space(a);
  CHECK(der.size() == 12);
  for (const Mat& d : der) CHECK(verify_derivation(a, d).pass);
  CHECK(in_matrix_span(der, Mat::diagonal({1, 1, -1, 1})));
  CHECK_FALSE(in_matrix_span(der, Mat::identity(4)));

  // every linear map is a derivation of an abelian algebra
  CHECK(derivation_space(abelian_algebra(3)).size() == 9);
}

TEST_CASE("involutive verification") {
  Algebra a = quartic();
  CHECK(verify_involutive(a, Mat::diagonal({1, 1, -1, 1})).pass);
  // derivation but not involutive
  Mat scaled = Mat::diagonal({1, 1, 1, 1});
  scaled.at(3, 3) = Rat(3);
  Report r = verify_involutive(a, scaled);
  CHECK_FALSE(r.pass);
  // involutive but not a derivation
  CHECK_FALSE(verify_involutive(a, Mat::diagonal({1, 1, -1, -1})).pass);
}

TEST_CASE("eigensplit") {
  Algebra a = quartic();
  EigenSplit es = eigensplit(a, Mat::diagonal({1, 1, -1, 1}));
  CHECK(es.plus.dim() == 3);
  CHECK(es.minus.dim() == 1);
  CHECK(es.plus.contains(unit_vec(4, 0)));
  CHECK(es.plus.contains(unit_vec(4, 3)));
  CHECK(es.minus.contains(unit_vec(4, 2)));
  CHECK_THROWS_AS(eigensplit(a, Mat::identity(4)), DomainError);
}

TEST_CASE("dd identity") {
  Algebra a = quartic();
  for (const Mat& d : search_involutive_diagonal(a)) CHECK(verify_dd_identity(a, d).pass);
  CHECK_FALSE(verify_dd_identity(a, Mat::identity(4)).pass);
}

TEST_CASE("diagonal witness search") {
  Algebra a = quartic();
  std::vector<Mat> wits = search_involutive_diagonal(a);
  // solutions of d4 = d1+d2+d3 over signs: one or two of d1..d3 negative
  CHECK(wits.size() == 6);
  for (const Mat& d : wits) CHECK(verify_involutive(a, d).pass);
  // lexicographic order, +1 before -1
  CHECK(wits.front() == Mat::diagonal({1, 1, -1, 1}));
  CHECK(wits.back() == Mat::diagonal({-1, -1, 1, -1}));

  // abelian: every sign pattern works, 2^n of them
  CHECK(search_involutive_diagonal(abelian_algebra(3)).size() == 8);
}
