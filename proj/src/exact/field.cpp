#include "parahn/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "parahn/errors.hpp"

namespace parahn {

namespace {

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

Coeffs mod_poly(Coeffs a, const Coeffs& m, std::uint64_t p) {
  trim(a);
  std::uint64_t lc_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back() * lc_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) {
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    }
    trim(a);
  }
  return a;
}

Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return mod_poly(std::move(r), m, p);
}

Coeffs gcd_poly(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = mod_poly(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Ben-Or: f of degree k is irreducible iff gcd(x^(p^i) - x, f) = 1 for i <= k/2.
bool is_irreducible(const Coeffs& f, std::uint64_t p) {
  std::size_t k = f.size() - 1;
  Coeffs x = mod_poly({0, 1}, f, p);
  Coeffs h = x;
  for (std::size_t i = 1; i <= k / 2; ++i) {
    Coeffs base = h;
    Coeffs acc{1};
    for (std::uint64_t e = p; e; e >>= 1) {
      if (e & 1) acc = mul_mod(acc, base, f, p);
      base = mul_mod(base, base, f, p);
    }
    h = acc;
    Coeffs d = h;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    trim(d);
    Coeffs g = gcd_poly(f, d, p);
    if (g.size() != 1) return false;
  }
  return true;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t k) {
  // digits[0] is c_0 and is the most significant in the comparison order
  std::vector<std::uint32_t> digits(k, 0);
  while (true) {
    Coeffs f(digits.begin(), digits.end());
    f.push_back(1);
    if (digits[0] != 0 && is_irreducible(f, p)) {
      std::vector<std::uint32_t> out(digits);
      out.push_back(1);
      return out;
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++digits[i] < p) break;
      digits[i] = 0;
      if (i == 0) throw Error("Internal", "no irreducible polynomial found");
    }
  }
}

std::vector<std::uint32_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<std::uint32_t>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<std::uint32_t>(n));
  return out;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;

  Coeffs m;
  if (k > 1) {
    m.assign(modulus_.begin(), modulus_.end());
  } else {
    m = {0, 1};
  }
  auto to_coeffs = [&](Elem a) {
    Coeffs c;
    for (std::uint32_t i = 0; i < k_; ++i) {
      c.push_back(a % p_);
      a /= p_;
    }
    trim(c);
    return c;
  };
  auto to_elem = [&](const Coeffs& c) {
    Elem a = 0;
    for (std::size_t i = c.size(); i-- > 0;) a = a * p_ + static_cast<Elem>(c[i]);
    return a;
  };
  auto slow_mul = [&](Elem a, Elem b) {
    if (k_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
    return to_elem(mul_mod(to_coeffs(a), to_coeffs(b), m, p_));
  };
  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  std::uint32_t order = q_ - 1;
  Elem g = 1;
  if (order > 1) {
    auto factors = prime_factors(order);
    for (g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto l : factors) {
        if (slow_pow(g, order / l) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) break;
    }
  }
  exp_.resize(order);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = slow_mul(cur, g);
  }

  neg_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Elem r = 0, pw = 1, x = a;
    for (std::uint32_t i = 0; i < k_; ++i) {
      r += ((p_ - x % p_) % p_) * pw;
      x /= p_;
      pw *= p_;
    }
    neg_[a] = r;
  }
  if (q_ <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a) {
      for (Elem b = 0; b < q_; ++b) add_table_[static_cast<std::size_t>(a) * q_ + b] = add_digits(a, b);
    }
  }
}

Elem Field::add_digits(Elem a, Elem b) const {
  if (k_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem r = 0, pw = 1;
  for (std::uint32_t i = 0; i < k_; ++i) {
    Elem s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return r;
}

Elem Field::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  return add_digits(a, b);
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in " + name());
  std::uint32_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  std::uint64_t order = q_ - 1;
  return exp_[static_cast<std::uint64_t>(log_[a]) * (e % order) % order];
}

Elem Field::from_int(long v) const {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(k_);
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() > k_) throw ParseError("too many coefficients for " + name());
  Elem a = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw ParseError("coefficient out of range for " + name());
    a = a * p_ + c[i];
  }
  return a;
}

std::string Field::name() const {
  if (k_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

const Field& field_make(long p, long k) {
  if (k < 1) throw InvalidDegree("extension degree must be >= 1, got " + std::to_string(k));
  if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (long i = 0; i < k; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldOrder) {
      throw InvalidDegree("field order " + std::to_string(p) + "^" + std::to_string(k) +
                          " exceeds the supported maximum");
    }
  }
  static std::mutex mu;
  static std::map<std::pair<long, long>, std::unique_ptr<Field>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, k}];
  if (!slot) {
    std::vector<std::uint32_t> modulus;
    if (k > 1) modulus = smallest_irreducible(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k));
    slot.reset(new Field(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k), std::move(modulus)));
  }
  return *slot;
}

const Field& field_extend(const Field& f, long m) {
  if (m < 1) throw InvalidDegree("extension degree must be >= 1");
  return field_make(f.p(), static_cast<long>(f.k()) * m);
}

Elem embed(const Field& small, const Field& big, Elem x) {
  if (&small == &big) return x;
  if (small.p() != big.p() || big.k() % small.k() != 0) {
    throw FieldMismatch("no embedding " + small.name() + " -> " + big.name());
  }
  if (small.k() == 1) return x;
  static std::mutex mu;
  static std::map<std::pair<const Field*, const Field*>, std::vector<Elem>> images;
  std::lock_guard<std::mutex> lock(mu);
  auto& table = images[{&small, &big}];
  if (table.empty()) {
    const auto& m = small.modulus();
    Elem root = 0;
    bool found = false;
    for (Elem r = 0; r < big.q() && !found; ++r) {
      Elem acc = 0;
      for (std::size_t i = m.size(); i-- > 0;) acc = big.add(big.mul(acc, r), static_cast<Elem>(m[i]));
      if (acc == 0) {
        root = r;
        found = true;
      }
    }
    if (!found) throw Error("Internal", "modulus has no root in " + big.name());
    table.resize(small.q());
    for (Elem a = 0; a < small.q(); ++a) {
      auto c = small.coeffs(a);
      Elem acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = big.add(big.mul(acc, root), static_cast<Elem>(c[i]));
      table[a] = acc;
    }
  }
  return table.at(x);
}

}  // namespace parahn
