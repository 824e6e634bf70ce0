#pragma once

#include <climits>
#include <string>
#include <utility>
#include <vector>

#include "parahn/field.hpp"

namespace parahn {

// Degree of the zero polynomial.
constexpr int kDegNegInf = INT_MIN;

// Univariate polynomial over a Field, coefficients low to high with no
// trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Field& f) : f_(&f) {}
  Poly(const Field& f, std::vector<Elem> c);
  static Poly constant(const Field& f, Elem c);
  static Poly monomial(const Field& f, Elem c, int deg);

  const Field& field() const { return *f_; }
  const Field* field_ptr() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int deg() const { return c_.empty() ? kDegNegInf : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : 0; }
  Elem eval(Elem x) const;

  Poly monic() const;
  Poly scaled(Elem c) const;
  Poly shifted(int k) const;  // times t^k, k >= 0
  // p(1/t) * t^d, requires d >= deg.
  Poly reversed(int d) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  std::string str() const;

 private:
  void check_same(const Poly& o) const;
  void trim();

  const Field* f_ = nullptr;
  std::vector<Elem> c_;
};

// Quotient and remainder; throws DivisionByZero for b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);

// Monic gcd, gcd(0,0) = 0. Throws FieldMismatch.
Poly poly_gcd(const Poly& a, const Poly& b);

struct Bezout {
  Poly g, s, t;  // g = s*a + t*b
};
Bezout poly_xgcd(const Poly& a, const Poly& b);

// Coefficientwise image under embed().
Poly poly_embed(const Poly& a, const Field& big);

}  // namespace parahn
