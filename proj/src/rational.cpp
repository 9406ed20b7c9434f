#include "lie3/rational.hpp"

#include <stdexcept>

namespace lie3 {

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class num(text);
      return Rat(num);
    }
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    Rat r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string to_string(const Rat& r) { return r.get_str(); }

Vec zero_vec(int dim) { return Vec(static_cast<size_t>(dim), Rat(0)); }

Vec unit_vec(int dim, int index) {
  Vec v = zero_vec(dim);
  v[static_cast<size_t>(index)] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  Vec r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec operator-(const Vec& a) {
  Vec r(a);
  for (Rat& x : r) x = -x;
  return r;
}

Vec operator*(const Rat& s, const Vec& v) {
  Vec r(v);
  for (Rat& x : r) x *= s;
  return r;
}

void add_scaled(Vec& acc, const Rat& s, const Vec& v) {
  if (s == 0) return;
  for (size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
}

std::string format_combo(const Vec& v, const std::vector<std::string>& labels) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    Rat c = v[i];
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
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

}  // namespace lie3
