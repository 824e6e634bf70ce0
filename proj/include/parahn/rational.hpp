#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace parahn {

// Exact rational with canonical form (reduced, positive denominator).
class Rat {
 public:
  Rat() = default;
  Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rat(long n, long d);
  explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts "a/b", "a" and "-a/b"; rejects zero denominators.
  static Rat parse(std::string_view text);

  // Always "a/b" with b > 0, including integers ("2/1").
  std::string str() const;

  const mpq_class& value() const { return v_; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Floor/ceil as machine integers; throws std::overflow_error when out of range.
  long floor() const;
  long ceil() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace parahn
