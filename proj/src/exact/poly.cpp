#include "parahn/poly.hpp"

#include <algorithm>

#include "parahn/errors.hpp"

namespace parahn {

Poly::Poly(const Field& f, std::vector<Elem> c) : f_(&f), c_(std::move(c)) { trim(); }

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Elem c, int deg) {
  if (c == 0) return Poly(f);
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return Poly(f, std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
  if (f_ != o.f_) {
    if (f_ == nullptr || o.f_ == nullptr) throw FieldMismatch("polynomial without a field");
    throw FieldMismatch("polynomials over " + f_->name() + " and " + o.f_->name());
  }
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  return scaled(f_->inv(c_.back()));
}

Poly Poly::scaled(Elem c) const {
  if (c == 0) return Poly(*f_);
  Poly r = *this;
  for (auto& x : r.c_) x = f_->mul(x, c);
  return r;
}

Poly Poly::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  Poly r(*f_);
  r.c_.assign(k, 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::reversed(int d) const {
  if (c_.empty()) return *this;
  if (d < deg()) throw InvalidDegree("reversal degree below polynomial degree");
  std::vector<Elem> r(d + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[d - i] = c_[i];
  return Poly(*f_, std::move(r));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = f_->neg(x);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  check_same(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_same(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = f_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  if (a.c_.empty() || b.c_.empty()) return Poly(*a.f_);
  const Field& f = *a.f_;
  std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(f, std::move(r));
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    bool show_coeff = c_[i] != 1 || i == 0;
    if (show_coeff) s += std::to_string(c_[i]);
    if (i > 0) {
      if (show_coeff) s += "*";
      s += "t";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
  if (a.field_ptr() != b.field_ptr()) throw FieldMismatch("divmod over different fields");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Field& f = a.field();
  std::vector<Elem> r = a.coeffs();
  int db = b.deg();
  if (a.deg() < db) return {Poly(f), a};
  std::vector<Elem> qc(a.deg() - db + 1, 0);
  Elem li = f.inv(b.lead());
  const auto& bc = b.coeffs();
  for (int i = a.deg(); i >= db; --i) {
    Elem c = f.mul(r[i], li);
    qc[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(c, bc[j]));
  }
  return {Poly(f, std::move(qc)), Poly(f, std::move(r))};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.field_ptr() != b.field_ptr()) throw FieldMismatch("gcd over different fields");
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Bezout poly_xgcd(const Poly& a, const Poly& b) {
  if (a.field_ptr() != b.field_ptr()) throw FieldMismatch("xgcd over different fields");
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, 1), s1(f);
  Poly t0(f), t1 = Poly::constant(f, 1);
  while (!r1.is_zero()) {
    auto [qt, r] = poly_divmod(r0, r1);
    Poly s = s0 - qt * s1;
    Poly t = t0 - qt * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Elem li = f.inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly poly_embed(const Poly& a, const Field& big) {
  std::vector<Elem> c;
  c.reserve(a.coeffs().size());
  for (Elem x : a.coeffs()) c.push_back(embed(a.field(), big, x));
  return Poly(big, std::move(c));
}

}  // namespace parahn
