#include "lie3/cli.hpp"

#include "lie3/algebra.hpp"
#include "lie3/bialgebra.hpp"
#include "lie3/catalog.hpp"
#include "lie3/derivation.hpp"
#include "lie3/errors.hpp"
#include "lie3/io.hpp"
#include "lie3/prelie.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace lie3 {

namespace {

enum class Format { text, records };

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// key=value group; values with spaces are quoted so a record stays one line.
std::string kv(const std::string& key, const std::string& value) {
  if (value.find(' ') == std::string::npos && value.find('"') == std::string::npos) return key + "=" + value;
  std::string quoted;
  for (char c : value) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  return key + "=\"" + quoted + "\"";
}

struct Printer {
  std::ostream& out;
  Format fmt;

  void report(const Report& r) const {
    if (fmt == Format::text) {
      out << r.summary() << "\n";
      for (const std::string& v : r.violations) out << "  " << v << "\n";
    } else {
      out << kv("check", r.check) << " " << kv("pass", r.pass ? "1" : "0") << "\n";
      for (const std::string& v : r.violations) out << kv("check", r.check) << " " << kv("violation", v) << "\n";
    }
  }

  void composite(const CompositeReport& c) const {
    for (const Report& r : c.parts) report(r);
    if (fmt == Format::text)
      out << c.check << ": " << (c.pass() ? "pass" : "fail") << "\n";
    else
      out << kv("check", c.check) << " " << kv("pass", c.pass() ? "1" : "0") << "\n";
  }

  void line(const std::string& text_form, const std::vector<std::pair<std::string, std::string>>& record) const {
    if (fmt == Format::text) {
      out << text_form << "\n";
    } else {
      bool first = true;
      for (const auto& [k, v] : record) {
        if (!first) out << " ";
        out << kv(k, v);
        first = false;
      }
      out << "\n";
    }
  }
};

std::string diag_signs(const Mat& d) {
  std::string s;
  for (int i = 0; i < d.cols(); ++i) {
    if (i) s += " ";
    s += to_string(d.at(i, i));
  }
  return s;
}

Params parse_params(const std::vector<std::string>& kvs) {
  Params p;
  for (const std::string& item : kvs) {
    size_t eq = item.find('=');
    if (eq == std::string::npos) throw ParamError("bad --params item '" + item + "', expected name=value");
    p.set(item.substr(0, eq), parse_rat(item.substr(eq + 1)));
  }
  return p;
}

void print_ledger(const Printer& pr, const DiscrepancyLedger& ledger) {
  if (ledger.empty()) {
    pr.line("ledger: empty (table reproduced verbatim)", {{"ledger", "empty"}});
    return;
  }
  pr.line("ledger: " + std::to_string(ledger.size()) + " records",
          {{"ledger", std::to_string(ledger.size())}});
  for (const DiscrepancyRecord& r : ledger)
    pr.line("  [" + r.classification + "] " + r.object + " " + r.coordinate + ": computed " + r.computed +
                ", printed " + r.printed,
            {{"case", r.case_id},
             {"object", r.object},
             {"coordinate", r.coordinate},
             {"computed", r.computed},
             {"printed", r.printed},
             {"classification", r.classification}});
}

// Reproduces one case, printing tables and (optionally) the ledger.
// Returns false when an engine-level verification fails.
bool run_catalog_case(const Printer& pr, const std::string& id, const Params& params, bool verify_paper) {
  const CatalogEntry& entry = catalog_entry(id);
  pr.line("case " + id + (entry.table.empty() ? "" : " (table " + entry.table + ")"),
          {{"case", id}, {"table", entry.table.empty() ? "-" : entry.table}});
  for (const std::string& n : entry.notes) pr.line("note: " + n, {{"case", id}, {"note", n}});
  PipelineResult res = reproduce_case(id, params);
  if (!res.has_witness) {
    pr.line("no diagonal witness", {{"case", id}, {"witness", "none"}});
    if (verify_paper && !has_printed_table(id)) pr.line("no printed table", {{"case", id}, {"ledger", "skipped"}});
    return true;
  }
  pr.line("witness: diag " + diag_signs(res.D), {{"case", id}, {"witness", diag_signs(res.D)}});
  for (const auto& [key, value] : res.B.c)
    pr.line("mu(" + res.B.basis[static_cast<size_t>(key[0])] + "," + res.B.basis[static_cast<size_t>(key[1])] + "," +
                res.B.basis[static_cast<size_t>(key[2])] + ") = " + format_combo(value, res.B.basis),
            {{"case", id},
             {"mu", res.B.basis[static_cast<size_t>(key[0])] + "," + res.B.basis[static_cast<size_t>(key[1])] + "," +
                        res.B.basis[static_cast<size_t>(key[2])]},
             {"value", format_combo(value, res.B.basis)}});
  for (int i = 0; i < res.B.dim; ++i) {
    Tensor img = res.delta.total(i);
    if (img.is_zero()) continue;
    pr.line("Delta(" + res.B.basis[static_cast<size_t>(i)] + ") = " + wedge_normal_form(img, res.B.basis),
            {{"case", id},
             {"delta", res.B.basis[static_cast<size_t>(i)]},
             {"value", wedge_normal_form(img, res.B.basis)}});
  }
  CompositeReport checks = verify_local_cocycle_bialgebra(res.B, res.delta);
  pr.line("bialgebra checks: " + std::string(checks.pass() ? "pass" : "fail"),
          {{"case", id}, {"checks", checks.pass() ? "pass" : "fail"}});
  if (!checks.pass()) pr.composite(checks);
  if (verify_paper) {
    if (!has_printed_table(id))
      pr.line("no printed table", {{"case", id}, {"ledger", "skipped"}});
    else
      print_ledger(pr, compare_with_paper(id, params));
  }
  return checks.pass();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out) {
  CLI::App app{"exact-arithmetic toolkit for 3-Lie algebras and their bialgebras"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "records"}));

  std::string alg_path, der_path, mode = "both", case_id;
  bool search_diag = false, verify_paper = false, list_cases = false, all_cases = false;
  std::vector<std::string> param_kvs;

  CLI::App* verify = app.add_subcommand("verify", "Filippov identity and antisymmetry");
  verify->add_option("algebra", alg_path)->required();

  CLI::App* invariants = app.add_subcommand("invariants", "derived algebra, center and derivation dimensions");
  invariants->add_option("algebra", alg_path)->required();

  CLI::App* involutive = app.add_subcommand("involutive", "verify an involutive derivation or search diagonal ones");
  involutive->add_option("algebra", alg_path)->required();
  involutive->add_option("--derivation", der_path);
  involutive->add_flag("--search", search_diag, "search diagonal +-1 witnesses");

  CLI::App* prelie = app.add_subcommand("prelie", "3-pre-Lie products induced by an involutive derivation");
  prelie->add_option("algebra", alg_path)->required();
  prelie->add_option("--derivation", der_path)->required();
  prelie->add_option("--mode", mode)->check(CLI::IsMember({"D", "A", "both"}));

  CLI::App* semi = app.add_subcommand("semidirect", "emit the semidirect product with the coadjoint representation");
  semi->add_option("algebra", alg_path)->required();

  CLI::App* cybe = app.add_subcommand("cybe", "check [[r,r,r]] = 0 for r built from an involutive derivation");
  cybe->add_option("algebra", alg_path)->required();
  cybe->add_option("--derivation", der_path)->required();

  CLI::App* bial = app.add_subcommand("bialgebra", "full pipeline: witness -> semidirect -> r -> coproduct");
  bial->add_option("algebra", alg_path)->required();
  bial->add_option("--derivation", der_path)->required();

  CLI::App* cat = app.add_subcommand("catalog", "classified 4- and 5-dimensional cases and paper tables");
  cat->add_flag("--list", list_cases);
  cat->add_option("--case", case_id);
  cat->add_option("--params", param_kvs);
  cat->add_flag("--verify-paper", verify_paper);
  cat->add_flag("--all", all_cases);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);
  Printer pr{out, format == "records" ? Format::records : Format::text};

  if (verify->parsed()) {
    Algebra alg = parse_algebra(slurp(alg_path));
    pr.line("algebra " + alg.name + " dim " + std::to_string(alg.dim),
            {{"algebra", alg.name}, {"dim", std::to_string(alg.dim)}});
    pr.line("antisymmetry: pass", {{"check", "antisymmetry"}, {"pass", "1"}});
    Report r = verify_filippov(alg);
    pr.report(r);
    return r.pass ? 0 : 1;
  }

  if (invariants->parsed()) {
    Algebra alg = parse_algebra(slurp(alg_path));
    pr.line("derived algebra: dim " + std::to_string(derived_algebra(alg).dim()),
            {{"invariant", "derived"}, {"dim", std::to_string(derived_algebra(alg).dim())}});
    pr.line("center: dim " + std::to_string(center(alg).dim()),
            {{"invariant", "center"}, {"dim", std::to_string(center(alg).dim())}});
    pr.line("derivations: dim " + std::to_string(static_cast<int>(derivation_space(alg).size())),
            {{"invariant", "derivations"}, {"dim", std::to_string(static_cast<int>(derivation_space(alg).size()))}});
    return 0;
  }

  if (involutive->parsed()) {
    Algebra alg = parse_algebra(slurp(alg_path));
    if (search_diag) {
      std::vector<Mat> ws = search_involutive_diagonal(alg);
      if (ws.empty()) {
        pr.line("no diagonal witness", {{"witness", "none"}});
      } else {
        for (const Mat& w : ws) pr.line("witness: diag " + diag_signs(w), {{"witness", diag_signs(w)}});
      }
      return 0;
    }
    if (der_path.empty()) throw ParseError(0, "involutive: provide --derivation or --search");
    Mat D = parse_derivation(slurp(der_path));
    Report rd = verify_derivation(alg, D);
    Report ri = verify_involutive(alg, D);
    pr.report(rd);
    pr.report(ri);
    return rd.pass && ri.pass ? 0 : 1;
  }

  if (prelie->parsed()) {
    Algebra alg = parse_algebra(slurp(alg_path));
    Mat D = parse_derivation(slurp(der_path));
    Report ri = verify_involutive(alg, D);
    pr.report(ri);
    if (!ri.pass) return 1;
    bool ok = true;
    if (mode == "D" || mode == "both") {
      Report r = verify_prelie(prelie_from_D(alg, D));
      r.check = "prelie-D " + r.check;
      pr.report(r);
      ok = ok && r.pass;
    }
    if (mode == "A" || mode == "both") {
      Report r = verify_prelie(prelie_compatible(alg, D));
      r.check = "prelie-A " + r.check;
      pr.report(r);
      ok = ok && r.pass;
    }
    return ok ? 0 : 1;
  }

  if (semi->parsed()) {
    Algebra alg = parse_algebra(slurp(alg_path));
    out << emit_algebra(semidirect(alg));
    return 0;
  }

  if (cybe->parsed()) {
    Algebra alg = parse_algebra(slurp(alg_path));
    Mat D = parse_derivation(slurp(der_path));
    Report ri = verify_involutive(alg, D);
    if (!ri.pass) {
      pr.report(ri);
      return 1;
    }
    Report r = verify_cybe(semidirect(alg), r_from_D(alg, D));
    if (r.pass)
      pr.line("[[r,r,r]] = 0", {{"check", r.check}, {"pass", "1"}});
    else
      pr.report(r);
    return r.pass ? 0 : 1;
  }

  if (bial->parsed()) {
    Algebra alg = parse_algebra(slurp(alg_path));
    Mat D = parse_derivation(slurp(der_path));
    Report ri = verify_involutive(alg, D);
    if (!ri.pass) {
      pr.report(ri);
      return 1;
    }
    Algebra B = semidirect(alg);
    Coproduct delta = coproduct_from_r(B, r_from_D(alg, D));
    for (int i = 0; i < B.dim; ++i) {
      Tensor img = delta.total(i);
      if (img.is_zero()) continue;
      pr.line("Delta(" + B.basis[static_cast<size_t>(i)] + ") = " + wedge_normal_form(img, B.basis),
              {{"delta", B.basis[static_cast<size_t>(i)]}, {"value", wedge_normal_form(img, B.basis)}});
    }
    CompositeReport checks = verify_local_cocycle_bialgebra(B, delta);
    pr.composite(checks);
    return checks.pass() ? 0 : 1;
  }

  // catalog
  if (list_cases) {
    for (const std::string& id : catalog_cases()) {
      const CatalogEntry& e = catalog_entry(id);
      pr.line(id + " dim " + std::to_string(e.dim) + " table " + (e.table.empty() ? "-" : e.table),
              {{"case", id}, {"dim", std::to_string(e.dim)}, {"table", e.table.empty() ? "-" : e.table}});
    }
    return 0;
  }
  Params params = parse_params(param_kvs);
  if (all_cases) {
    bool ok = true;
    for (const std::string& id : catalog_cases()) ok = run_catalog_case(pr, id, params, verify_paper) && ok;
    return ok ? 0 : 1;
  }
  if (case_id.empty()) throw ParseError(0, "catalog: provide --list, --case <id> or --all");
  return run_catalog_case(pr, case_id, params, verify_paper) ? 0 : 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const LookupError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ParamError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "verification error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lie3
