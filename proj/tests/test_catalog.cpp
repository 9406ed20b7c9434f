#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lie3/catalog.hpp"
#include "lie3/derivation.hpp"
#include "lie3/errors.hpp"

#include <map>
#include <string>
#include <vector>

using namespace lie3;

namespace {

const std::map<std::string, size_t> kLedgerSizes = {
    {"4-b1", 0}, {"4-b2", 1}, {"4-c1", 0}, {"4-c2", 0}, {"4-c3", 0}, {"4-d1", 0}, {"4-e1", 1},
    {"5-b1", 0}, {"5-b2", 0}, {"5-c1", 0}, {"5-c2", 0}, {"5-c3", 0}, {"5-c4", 2}, {"5-c5", 0},
    {"5-c6", 2}, {"5-c7", 0}, {"5-d1", 8}, {"5-d2", 1}, {"5-d3", 17}, {"5-d4", 0}, {"5-d5", 3},
    {"5-d6", 0}, {"5-d7", 2}, {"5-e2", 0},
};

}  // namespace

TEST_CASE("case inventory") {
  const std::vector<std::string>& ids = catalog_cases();
  CHECK(ids.size() == 25);
  CHECK(ids.front() == "4-b1");
  CHECK(ids.back() == "5-e2");
  CHECK(catalog_entry("4-b1").dim == 4);
  CHECK(catalog_entry("4-b1").table == "mu1");
  CHECK(catalog_entry("5-b2").table == "psi17");
  CHECK(catalog_entry("5-e1").table.empty());
  CHECK_FALSE(has_printed_table("5-e1"));
  CHECK(has_printed_table("5-d4"));
  CHECK_THROWS_AS(catalog_entry("6-z9"), LookupError);
  CHECK_THROWS_AS(catalog_algebra("nope"), LookupError);
}

TEST_CASE("parameters") {
  Params p;
  p.set("a", Rat(3));
  CHECK(p.alpha == 3);
  CHECK(p.get("alpha") == 3);
  p.set("beta", frac(-1, 2));
  CHECK(p.get("b") == frac(-1, 2));
  CHECK_THROWS_AS(p.set("gamma", Rat(1)), ParamError);

  Params zero;
  zero.set("a", Rat(0));
  CHECK_THROWS_AS(catalog_algebra("4-c2", zero), ParamError);
  CHECK_THROWS_AS(catalog_algebra("5-c5", zero), ParamError);
  CHECK_THROWS_AS(catalog_algebra("5-c6", zero), ParamError);
  Params bzero;
  bzero.set("b", Rat(0));
  CHECK_THROWS_AS(catalog_algebra("5-d5", bzero), ParamError);
  Params szero;
  szero.set("s", Rat(0));
  CHECK_THROWS_AS(catalog_algebra("5-d7", szero), ParamError);
  // 5-d2 closes the Filippov identity for every alpha
  CHECK(verify_filippov(catalog_algebra("5-d2", zero)).pass);
}

TEST_CASE("every case is a 3-lie algebra, for generic parameters too") {
  std::vector<Params> trials(4);
  trials[1].set("a", Rat(2));
  trials[1].set("t", Rat(5));
  trials[2].set("a", frac(-1, 3));
  trials[2].set("b", frac(7, 2));
  trials[2].set("u", Rat(-1));
  trials[3].set("a", Rat(-4));
  trials[3].set("s", frac(2, 5));
  trials[3].set("t", frac(-3, 7));
  trials[3].set("u", Rat(11));
  for (const std::string& id : catalog_cases())
    for (const Params& p : trials) {
      Algebra a = catalog_algebra(id, p);
      CHECK_MESSAGE(verify_filippov(a).pass, id);
    }
}

TEST_CASE("pipeline witnesses") {
  PipelineResult r = reproduce_case("4-b1");
  CHECK(r.has_witness);
  CHECK(r.D == Mat::diagonal({1, 1, 1, -1}));
  CHECK(r.B.dim == 8);
  CHECK(verify_involutive(r.alg, r.D).pass);
  CHECK(verify_cybe(r.B, r.r).pass);
  CHECK(verify_local_cocycle_bialgebra(r.B, r.delta).pass());

  CHECK(reproduce_case("4-b2").D == Mat::diagonal({1, 1, -1, 1}));
  CHECK(reproduce_case("5-d5").D == Mat::diagonal({1, 1, 1, 1, -1}));
  CHECK(reproduce_case("5-e2").D == Mat::diagonal({1, -1, 1, -1, 1}));

  PipelineResult e1 = reproduce_case("5-e1");
  CHECK_FALSE(e1.has_witness);
  CHECK(verify_filippov(e1.alg).pass);
}

TEST_CASE("table comparison ledgers") {
  for (const auto& [id, expected] : kLedgerSizes) {
    DiscrepancyLedger led = compare_with_paper(id);
    CHECK_MESSAGE(led.size() == expected, id, ": got ", led.size());
    for (const DiscrepancyRecord& rec : led) {
      CHECK(rec.case_id == id);
      CHECK_FALSE(rec.computed.empty());  // every record carries the computed value
      CHECK((rec.classification == "sign" || rec.classification == "typo" || rec.classification == "structural"));
    }
  }
  CHECK(compare_with_paper("5-e1").empty());
}

TEST_CASE("known discrepancies are classified") {
  DiscrepancyLedger b2 = compare_with_paper("4-b2");
  REQUIRE(b2.size() == 1);
  CHECK(b2[0].object == "delta");
  CHECK(b2[0].classification == "typo");
  CHECK(b2[0].printed.find("x1^x3*^x1") != std::string::npos);
  CHECK(b2[0].computed.find("x1^x1*^x3*") != std::string::npos);

  for (const DiscrepancyRecord& rec : compare_with_paper("5-d1")) CHECK(rec.classification == "sign");

  int structural = 0;
  for (const DiscrepancyRecord& rec : compare_with_paper("5-d3"))
    if (rec.classification == "structural") ++structural;
  CHECK(structural == 16);
}

TEST_CASE("bialgebra checks pass for every witnessed case") {
  for (const std::string& id : catalog_cases()) {
    PipelineResult r = reproduce_case(id);
    if (!r.has_witness) continue;
    CHECK_MESSAGE(verify_local_cocycle_bialgebra(r.B, r.delta).pass(), id);
  }
}
