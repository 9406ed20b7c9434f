#pragma once

#include "lie3/algebra.hpp"
#include "lie3/bialgebra.hpp"
#include "lie3/matrix.hpp"

#include <string>
#include <vector>

namespace lie3 {

// Rational parameters of the classified families; defaults are the simplest
// legal values.
struct Params {
  Rat alpha{1};
  Rat beta{1};
  Rat s{1};
  Rat t{0};
  Rat u{0};

  Rat get(const std::string& name) const;
  void set(const std::string& name, Rat value);  // throws ParamError on unknown name
};

// One coordinate-level difference between the computed structure and the
// printed table. classification: "sign" (printed is the exact negative),
// "typo" (ill-formed or duplicated printed line), "structural" (anything
// else). Coordinates that match produce no record.
struct DiscrepancyRecord {
  std::string case_id;
  std::string object;  // "mu" or "delta"
  std::string coordinate;
  std::string computed;
  std::string printed;
  std::string classification;
};
using DiscrepancyLedger = std::vector<DiscrepancyRecord>;

struct CatalogEntry {
  std::string case_id;
  int dim = 0;
  std::string table;  // "mu1".."mu7", "psi1".."psi17"; empty = no printed table
  std::vector<std::string> required_nonzero;  // parameter names that must be != 0
  std::vector<std::string> notes;             // known deviations between source and tables
  bool has_witness_override = false;
  std::vector<int> witness_signs;             // +-1 diagonal when overridden
};

// Case ids in canonical order: 4-b1..4-e1 then 5-b1..5-e2.
const std::vector<std::string>& catalog_cases();

// Throws LookupError on unknown id.
const CatalogEntry& catalog_entry(const std::string& case_id);

// Structure constants of the named case at the given parameters.
// Throws LookupError / ParamError.
Algebra catalog_algebra(const std::string& case_id, const Params& params = {});

// Full pipeline: witness D -> semidirect -> r -> coproduct. When no diagonal
// involutive witness exists, has_witness is false and only alg/B are set.
struct PipelineResult {
  Algebra alg;
  bool has_witness = false;
  Mat D;
  Algebra B;
  Tensor r{2, 0};
  Coproduct delta;
};
PipelineResult reproduce_case(const std::string& case_id, const Params& params = {});

bool has_printed_table(const std::string& case_id);

// Diffs the computed semidirect brackets and coproduct against the printed
// tables, coordinate by coordinate, in deterministic order. Empty ledger
// means the printed table is reproduced verbatim.
DiscrepancyLedger compare_with_paper(const std::string& case_id, const Params& params = {});

}  // namespace lie3
