#include "lie3/io.hpp"

#include "lie3/errors.hpp"

#include <map>
#include <sstream>

namespace lie3 {

namespace {
// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line.substr(0, line.find('#')));
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_index(const std::string& tok, int dim, int line) {
  size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a basis index, got '" + tok + "'");
  }
  if (pos != tok.size()) throw ParseError(line, "expected a basis index, got '" + tok + "'");
  if (v < 1 || v > dim) throw ParseError(line, "index " + tok + " out of range 1.." + std::to_string(dim));
  return v - 1;
}

Rat parse_coeff(const std::string& tok, int line) {
  try {
    return parse_rat(tok);
  } catch (const std::exception&) {
    throw ParseError(line, "bad rational '" + tok + "'");
  }
}
}  // namespace

Algebra parse_algebra(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::string name = "algebra";
  int dim = -1;
  std::vector<std::string> labels;
  std::map<std::array<int, 3>, std::pair<Vec, int>> brackets;  // triple -> (value, line)
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    if (head == "algebra") {
      if (tok.size() != 2) throw ParseError(lineno, "usage: algebra <name>");
      name = tok[1];
    } else if (head == "dim") {
      if (tok.size() != 2) throw ParseError(lineno, "usage: dim <n>");
      try {
        dim = std::stoi(tok[1]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad dimension '" + tok[1] + "'");
      }
      if (dim < 1) throw ParseError(lineno, "dimension must be positive");
    } else if (head == "basis") {
      if (dim < 0) throw ParseError(lineno, "basis before dim");
      if (static_cast<int>(tok.size()) != dim + 1)
        throw ParseError(lineno, "expected " + std::to_string(dim) + " basis labels");
      labels.assign(tok.begin() + 1, tok.end());
    } else if (head == "bracket") {
      if (dim < 0) throw ParseError(lineno, "bracket before dim");
      if (tok.size() < 6 || tok[4] != "->")
        throw ParseError(lineno, "usage: bracket i j k -> l:coeff [l:coeff ...]");
      int i = parse_index(tok[1], dim, lineno);
      int j = parse_index(tok[2], dim, lineno);
      int k = parse_index(tok[3], dim, lineno);
      if (!(i < j && j < k))
        throw ParseError(lineno, "unordered triple (" + tok[1] + "," + tok[2] + "," + tok[3] +
                                     "): reorder to i<j<k and adjust the sign by permutation parity");
      std::array<int, 3> key{i, j, k};
      if (brackets.count(key))
        throw ParseError(lineno, "duplicate triple (" + tok[1] + "," + tok[2] + "," + tok[3] + "), first at line " +
                                     std::to_string(brackets[key].second));
      Vec value = zero_vec(dim);
      for (size_t t = 5; t < tok.size(); ++t) {
        size_t colon = tok[t].find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "expected l:coeff, got '" + tok[t] + "'");
        int l = parse_index(tok[t].substr(0, colon), dim, lineno);
        value[static_cast<size_t>(l)] += parse_coeff(tok[t].substr(colon + 1), lineno);
      }
      brackets.emplace(key, std::make_pair(std::move(value), lineno));
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (dim < 0) throw ParseError(0, "missing dim directive");
  Algebra alg(name, dim);
  if (!labels.empty()) alg.basis = labels;
  for (auto& [key, value] : brackets) alg.set_bracket(key[0], key[1], key[2], std::move(value.first));
  return alg;
}

std::string emit_algebra(const Algebra& alg) {
  std::ostringstream out;
  out << "algebra " << alg.name << "\n";
  out << "dim " << alg.dim << "\n";
  out << "basis";
  for (const std::string& b : alg.basis) out << " " << b;
  out << "\n";
  for (const auto& [key, value] : alg.c) {
    out << "bracket " << key[0] + 1 << " " << key[1] + 1 << " " << key[2] + 1 << " ->";
    for (int l = 0; l < alg.dim; ++l)
      if (value[static_cast<size_t>(l)] != 0) out << " " << l + 1 << ":" << to_string(value[static_cast<size_t>(l)]);
    out << "\n";
  }
  return out.str();
}

Mat parse_derivation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int dim = -1;
  bool have_diag = false;
  std::vector<Vec> rows;
  Mat diag_mat;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& head = tok[0];
    if (head == "derivation") {
      if (tok.size() != 2) throw ParseError(lineno, "usage: derivation <name>");
    } else if (head == "dim") {
      if (tok.size() != 2) throw ParseError(lineno, "usage: dim <n>");
      try {
        dim = std::stoi(tok[1]);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad dimension '" + tok[1] + "'");
      }
      if (dim < 1) throw ParseError(lineno, "dimension must be positive");
    } else if (head == "diag") {
      if (dim < 0) throw ParseError(lineno, "diag before dim");
      if (!rows.empty()) throw ParseError(lineno, "diag after row lines; use exactly one form");
      if (have_diag) throw ParseError(lineno, "duplicate diag line");
      if (static_cast<int>(tok.size()) != dim + 1)
        throw ParseError(lineno, "expected " + std::to_string(dim) + " diagonal entries");
      diag_mat = Mat(dim, dim);
      for (int i = 0; i < dim; ++i) diag_mat.at(i, i) = parse_coeff(tok[static_cast<size_t>(i + 1)], lineno);
      have_diag = true;
    } else if (head == "row") {
      if (dim < 0) throw ParseError(lineno, "row before dim");
      if (have_diag) throw ParseError(lineno, "row after diag line; use exactly one form");
      if (static_cast<int>(tok.size()) != dim + 1)
        throw ParseError(lineno, "expected " + std::to_string(dim) + " row entries");
      Vec row;
      for (int i = 0; i < dim; ++i) row.push_back(parse_coeff(tok[static_cast<size_t>(i + 1)], lineno));
      rows.push_back(std::move(row));
      if (static_cast<int>(rows.size()) > dim) throw ParseError(lineno, "more than " + std::to_string(dim) + " rows");
    } else {
      throw ParseError(lineno, "unknown directive '" + head + "'");
    }
  }
  if (dim < 0) throw ParseError(0, "missing dim directive");
  if (have_diag) return diag_mat;
  if (static_cast<int>(rows.size()) != dim)
    throw ParseError(0, "expected " + std::to_string(dim) + " rows, got " + std::to_string(rows.size()));
  Mat m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m.at(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)];
  return m;
}

std::string wedge_normal_form(const Tensor& t, const std::vector<std::string>& labels) {
  if (t.rank != 3) throw ShapeError("wedge_normal_form requires rank 3");
  if (!alternating_part(t).second) throw DomainError("wedge_normal_form requires an alternating tensor");
  if (t.is_zero()) return "0";
  std::string out;
  // An alternating tensor is determined by its entries at a<b<c, each of
  // which is the coefficient of one wedge monomial.
  for (const auto& [idx, v] : t.entries) {
    if (!(idx[0] < idx[1] && idx[1] < idx[2])) continue;
    Rat c = v;
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (c != 1) out += to_string(c) + "*";
    out += labels[static_cast<size_t>(idx[0])] + "^" + labels[static_cast<size_t>(idx[1])] + "^" +
           labels[static_cast<size_t>(idx[2])];
  }
  return out;
}

}  // namespace lie3
