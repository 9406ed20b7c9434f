#include "lie3/matrix.hpp"

#include <stdexcept>

namespace lie3 {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::diagonal(const std::vector<int>& signs) {
  int n = static_cast<int>(signs.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = signs[static_cast<size_t>(i)];
  return m;
}

Vec Mat::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector shape mismatch");
  Vec out = zero_vec(rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[static_cast<size_t>(c)] == 0) continue;
    for (int r = 0; r < rows_; ++r) out[static_cast<size_t>(r)] += at(r, c) * v[static_cast<size_t>(c)];
  }
  return out;
}

Vec Mat::column(int c) const {
  Vec out = zero_vec(rows_);
  for (int r = 0; r < rows_; ++r) out[static_cast<size_t>(r)] = at(r, c);
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Mat::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool Mat::is_zero() const {
  for (const Rat& x : a_)
    if (x != 0) return false;
  return true;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  Mat m(a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(r, k) == 0) continue;
      for (int c = 0; c < b.cols_; ++c) m.at(r, c) += a.at(r, k) * b.at(k, c);
    }
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  Mat m(a);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  Mat m(a);
  for (size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

Mat operator-(const Mat& a) {
  Mat m(a);
  for (Rat& x : m.a_) x = -x;
  return m;
}

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<Vec> rref(std::vector<Vec> rows) {
  if (rows.empty()) return rows;
  size_t ncols = rows[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < ncols && pivot_row < rows.size(); ++col) {
    size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[pivot_row], rows[sel]);
    Rat inv = 1 / rows[pivot_row][col];
    for (Rat& x : rows[pivot_row]) x *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col] == 0) continue;
      Rat f = rows[r][col];
      for (size_t c = 0; c < ncols; ++c) rows[r][c] -= f * rows[pivot_row][c];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::vector<Vec> nullspace(const Mat& m) {
  std::vector<Vec> rows;
  rows.reserve(static_cast<size_t>(m.rows()));
  for (int r = 0; r < m.rows(); ++r) {
    Vec row(static_cast<size_t>(m.cols()));
    for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] = m.at(r, c);
    rows.push_back(std::move(row));
  }
  rows = rref(rows);
  int n = m.cols();
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (const Vec& row : rows) {
    for (int c = 0; c < n; ++c)
      if (row[static_cast<size_t>(c)] != 0) {
        pivot_col_of_row.push_back(c);
        is_pivot[static_cast<size_t>(c)] = true;
        break;
      }
  }
  std::vector<Vec> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    Vec v = zero_vec(n);
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < rows.size(); ++r)
      v[static_cast<size_t>(pivot_col_of_row[r])] = -rows[r][static_cast<size_t>(free)];
    basis.push_back(std::move(v));
  }
  return rref(std::move(basis));
}

bool Subspace::contains(const Vec& v) const {
  Vec rem = v;
  for (const Vec& b : basis) {
    // leading entry of b is 1 at its pivot column
    size_t pivot = 0;
    while (pivot < b.size() && b[pivot] == 0) ++pivot;
    if (pivot == b.size()) continue;
    if (rem[pivot] != 0) {
      Rat f = rem[pivot];
      for (size_t c = 0; c < rem.size(); ++c) rem[c] -= f * b[c];
    }
  }
  return is_zero(rem);
}

Subspace span(int ambient, const std::vector<Vec>& vectors) {
  Subspace s;
  s.ambient = ambient;
  s.basis = rref(vectors);
  return s;
}

bool in_matrix_span(const std::vector<Mat>& basis, const Mat& target) {
  if (basis.empty()) return target.is_zero();
  int rows = target.rows(), cols = target.cols();
  auto flatten = [&](const Mat& m) {
    Vec v;
    v.reserve(static_cast<size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) v.push_back(m.at(r, c));
    return v;
  };
  std::vector<Vec> rowsv;
  for (const Mat& m : basis) rowsv.push_back(flatten(m));
  Subspace s = span(rows * cols, rowsv);
  return s.contains(flatten(target));
}

std::string format_matrix(const Mat& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    out += "[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += " ";
      out += to_string(m.at(r, c));
    }
    out += "]";
    if (r + 1 < m.rows()) out += "\n";
  }
  return out;
}

}  // namespace lie3
