#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parahn/linalg.hpp"
#include "parahn/poly.hpp"

namespace parahn {

// Dense matrix over F[t].
class PolyMat {
 public:
  PolyMat() = default;
  PolyMat(const Field& f, std::size_t rows, std::size_t cols)
      : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, Poly(f)) {}
  static PolyMat identity(const Field& f, std::size_t n);
  static PolyMat from_const(const Mat& m);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Poly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  PolyMat transpose() const;
  Mat eval(Elem x) const;
  bool is_zero() const;
  std::string str() const;

  friend PolyMat operator*(const PolyMat& a, const PolyMat& b);
  friend PolyMat operator+(const PolyMat& a, const PolyMat& b);
  friend bool operator==(const PolyMat& a, const PolyMat& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  const Field* f_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> a_;
};

// Determinant by cofactor expansion (small sizes only).
Poly det(const PolyMat& m);

struct Minor {
  std::vector<std::size_t> rows;
  Poly value;
};
// All maximal (cols x cols) minors of a tall matrix, rows in lexicographic order.
std::vector<Minor> maximal_minors(const PolyMat& m);

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

// M = U D V with U, V unimodular and D diagonal (rectangular), diagonal
// entries monic (or zero) with d_i | d_{i+1}. Inverses are tracked.
struct Smith {
  PolyMat U, D, V;
  PolyMat U_inv, V_inv;
};
Smith smith_form(const PolyMat& m);

PolyMat polymat_embed(const PolyMat& m, const Field& big);

}  // namespace parahn
