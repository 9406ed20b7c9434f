#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lie3 {

// Exact rational scalar. mpq_class keeps values canonical (reduced,
// positive denominator, 0 stored as 0/1) after every arithmetic op.
using Rat = mpq_class;

using Vec = std::vector<Rat>;

inline Rat frac(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" with arbitrary-precision integers.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(const std::string& text);

// Canonical rendering: "p" or "p/q", denominator always positive.
std::string to_string(const Rat& r);

Vec zero_vec(int dim);
Vec unit_vec(int dim, int index);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rat& s, const Vec& v);
void add_scaled(Vec& acc, const Rat& s, const Vec& v);

// Deterministic rendering of a coordinate vector against basis labels,
// e.g. "x1 - 1/2*x3"; "0" for the zero vector.
std::string format_combo(const Vec& v, const std::vector<std::string>& labels);

}  // namespace lie3
