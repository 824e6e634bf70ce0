#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace parahn {

using Elem = std::uint32_t;

// GF(p^k). Elements are encoded as sum c_i p^i with 0 <= c_i < p, the c_i
// being coefficients of the residue class modulo `modulus()` (low to high).
// Instances are interned: two Field references denote the same field iff
// they are the same object.
class Field {
 public:
  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t k() const { return k_; }
  std::uint32_t q() const { return q_; }
  // Monic, length k+1, low to high. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem primitive() const { return exp_[1 % (q_ - 1 == 0 ? 1 : q_ - 1)]; }

  bool contains(Elem a) const { return a < q_; }
  std::string name() const;

 private:
  friend const Field& field_make(long p, long k);
  Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  Elem add_digits(Elem a, Elem b) const;

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;  // q*q, only for small q
};

// Interned field with the lexicographically smallest monic irreducible
// modulus (c_0 compared first). Throws NotPrime / InvalidDegree.
const Field& field_make(long p, long k);

// Largest supported field order.
constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

// Image of x under the canonical inclusion small -> big, sending the class
// of X to the smallest-encoded root of small.modulus() in big.
// Requires big = GF(p^(k*m)).
Elem embed(const Field& small, const Field& big, Elem x);

// Extension of degree m over f (same characteristic, degree k*m).
const Field& field_extend(const Field& f, long m);

}  // namespace parahn
