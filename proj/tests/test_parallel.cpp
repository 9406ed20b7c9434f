#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lie3/bialgebra.hpp"
#include "lie3/catalog.hpp"
#include "lie3/prelie.hpp"

using namespace lie3;

TEST_CASE("default exec policy") {
  Exec saved = default_exec();
  set_default_exec(Exec::serial);
  CHECK(default_exec() == Exec::serial);
  set_default_exec(Exec::parallel);
  CHECK(default_exec() == Exec::parallel);
  set_default_exec(saved);
}

TEST_CASE("filippov kernel: serial == parallel on the largest catalog inputs") {
  for (const char* id : {"4-b1", "5-c6", "5-d3"}) {
    PipelineResult res = reproduce_case(id);
    Report s = verify_filippov(res.B, Exec::serial);
    Report p = verify_filippov(res.B, Exec::parallel);
    CHECK(s.pass);
    CHECK(s.pass == p.pass);
    CHECK(s.violations == p.violations);
  }
  // a failing input produces identical violation lists too
  Algebra bad("bad", 4);
  bad.set_bracket(0, 1, 2, unit_vec(4, 3));
  bad.set_bracket(0, 1, 3, unit_vec(4, 0));
  Report s = verify_filippov(bad, Exec::serial);
  Report p = verify_filippov(bad, Exec::parallel);
  CHECK_FALSE(s.pass);
  CHECK(s.violations == p.violations);
}

TEST_CASE("prelie kernel: serial == parallel") {
  PipelineResult res = reproduce_case("5-c6");
  TriProduct pd = prelie_from_D(res.alg, res.D);
  Report s = verify_prelie(pd, Exec::serial);
  Report p = verify_prelie(pd, Exec::parallel);
  CHECK(s.pass);
  CHECK(s.violations == p.violations);

  pd.at(0, 1, 2) = pd.at(0, 1, 2) + unit_vec(res.alg.dim, 0);
  Report sb = verify_prelie(pd, Exec::serial);
  Report pb = verify_prelie(pd, Exec::parallel);
  CHECK_FALSE(sb.pass);
  CHECK(sb.violations == pb.violations);
}

TEST_CASE("cybe kernel: serial == parallel") {
  for (const char* id : {"4-b2", "5-c6"}) {
    PipelineResult res = reproduce_case(id);
    Tensor s = cybe_bracket(res.B, res.r, Exec::serial);
    Tensor p = cybe_bracket(res.B, res.r, Exec::parallel);
    CHECK(s.is_zero());
    CHECK(s == p);
  }
  // nonzero bracket of a non-solution comes out identical as well
  PipelineResult res = reproduce_case("4-b1");
  Tensor half(2, res.B.dim);
  for (int i = 0; i < res.alg.dim; ++i) half.add_entry({res.alg.dim + i, i}, res.D.at(i, i));
  Tensor s = cybe_bracket(res.B, half, Exec::serial);
  Tensor p = cybe_bracket(res.B, half, Exec::parallel);
  CHECK_FALSE(s.is_zero());
  CHECK(s == p);
}
