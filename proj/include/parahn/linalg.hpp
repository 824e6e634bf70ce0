#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parahn/field.hpp"

namespace parahn {

// Dense row-major matrix over a Field.
class Mat {
 public:
  Mat() = default;
  Mat(const Field& f, std::size_t rows, std::size_t cols) : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  Mat(const Field& f, const std::vector<std::vector<Elem>>& rows);
  static Mat identity(const Field& f, std::size_t n);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Elem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elem at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::vector<Elem> row(std::size_t i) const;
  std::vector<std::vector<Elem>> to_rows() const;

  void append_row(const std::vector<Elem>& r);
  Mat transpose() const;
  Mat take_rows(std::size_t n) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend bool operator==(const Mat& a, const Mat& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  // Lexicographic on (rows, cols, entries).
  friend bool operator<(const Mat& a, const Mat& b);

  std::string str() const;

 private:
  const Field* f_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

struct Rref {
  Mat R;  // same shape as the input
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

Rref rref(const Mat& m);

// Nonzero rows of rref(m): the canonical basis of the row space.
Mat row_basis(const Mat& m);
std::size_t rank(const Mat& m);

// Rows form a basis of {x : m x = 0}, in reduced echelon form.
Mat nullspace(const Mat& m);

// Row spaces: stacking, containment, intersection dimension.
Mat vstack(const Mat& a, const Mat& b);
bool row_space_contains(const Mat& big, const Mat& small);
std::size_t intersection_dim(const Mat& a, const Mat& b);

// Image of the row space of `basis` under x -> m x; result is row_basis.
Mat image_rows(const Mat& m, const Mat& basis);

Mat mat_embed(const Mat& m, const Field& big);

}  // namespace parahn
