#pragma once

#include "lie3/rational.hpp"

#include <string>
#include <vector>

namespace lie3 {

// Dense exact matrix. Column j is the image of basis vector x_{j+1}
// when the matrix represents a linear map.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rat(0)) {}

  static Mat identity(int n);
  static Mat diagonal(const std::vector<int>& signs);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  Vec apply(const Vec& v) const;
  Vec column(int c) const;
  Mat transpose() const;
  bool is_identity() const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Row-echelon machinery over the rationals (exact Gauss-Jordan).
// Returns the nonzero rows of the reduced row echelon form.
std::vector<Vec> rref(std::vector<Vec> rows);

// Canonical basis of {v : M v = 0}, each vector of length cols(M),
// returned in RREF so equal nullspaces compare equal literally.
std::vector<Vec> nullspace(const Mat& m);

// Linear subspace in canonical (RREF) form.
struct Subspace {
  int ambient = 0;
  std::vector<Vec> basis;  // RREF rows, linearly independent

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const Vec& v) const;
  friend bool operator==(const Subspace& a, const Subspace& b) = default;
};

Subspace span(int ambient, const std::vector<Vec>& vectors);

// Solves span membership for a matrix-shaped unknown: true iff target is a
// linear combination of the given matrices.
bool in_matrix_span(const std::vector<Mat>& basis, const Mat& target);

std::string format_matrix(const Mat& m);

}  // namespace lie3
