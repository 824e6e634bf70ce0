#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "parahn/polymat.hpp"

namespace parahn {

// t^low * p(t), normalized so that p(0) != 0 (or p = 0 and low = 0).
class LPoly {
 public:
  LPoly() = default;
  explicit LPoly(const Field& f) : p_(f) {}
  LPoly(int low, Poly p);
  // q(1/t) for a polynomial q.
  static LPoly from_inverse(const Poly& q);

  int low() const { return low_; }
  int high() const { return p_.is_zero() ? kDegNegInf : low_ + p_.deg(); }
  const Poly& body() const { return p_; }
  bool is_zero() const { return p_.is_zero(); }
  Elem coeff(int e) const { return p_.coeff(e - low_); }
  const Field& field() const { return p_.field(); }

  LPoly shifted(int k) const;
  // Requires low >= 0.
  Poly to_poly() const;
  // Coefficients of t^0, t^-1, ... as a polynomial in s = 1/t; requires high <= 0.
  Poly to_inverse_poly() const;

  LPoly& operator+=(const LPoly& o);
  LPoly operator-() const { return LPoly(low_, -p_); }
  friend LPoly operator+(LPoly a, const LPoly& b) { return a += b; }
  friend LPoly operator-(LPoly a, const LPoly& b) { return a += -b; }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  friend bool operator==(const LPoly& a, const LPoly& b) { return a.low_ == b.low_ && a.p_ == b.p_; }

  std::string str() const;

 private:
  void normalize();
  int low_ = 0;
  Poly p_;
};

// Square or rectangular matrix over F[t, 1/t].
class LMat {
 public:
  LMat() = default;
  LMat(const Field& f, std::size_t rows, std::size_t cols)
      : f_(&f), rows_(rows), cols_(cols), a_(rows * cols, LPoly(f)) {}
  static LMat from_poly(const PolyMat& m);
  // Entries q(1/t).
  static LMat from_inverse_poly(const PolyMat& m);
  static LMat identity(const Field& f, std::size_t n);

  const Field& field() const { return *f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  LPoly& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const LPoly& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  LMat transpose() const;
  int min_low() const;
  int max_high() const;
  bool is_polynomial() const { return min_low() >= 0; }
  bool is_inverse_polynomial() const { return max_high() <= 0; }
  PolyMat to_poly() const;
  std::string str() const;

  friend LMat operator*(const LMat& a, const LMat& b);
  friend bool operator==(const LMat& a, const LMat& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  const Field* f_ = nullptr;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<LPoly> a_;
};

LMat lmat_diag_monomials(const Field& f, const std::vector<int>& exps);
LPoly lmat_det(const LMat& m);

struct Birkhoff {
  std::vector<int> twists;  // nonincreasing
  LMat A_plus;              // invertible over F[t]
  LMat A_minus;             // invertible over F[1/t]
  LMat A_plus_inv;
};

// T = A_plus * diag(t^twists) * A_minus. Throws NotInvertible unless det T
// is a nonzero monomial; ShapeMismatch unless square.
Birkhoff birkhoff_factorize(const LMat& T);

}  // namespace parahn
