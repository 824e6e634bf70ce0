#include "parahn/laurent.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

#include "parahn/errors.hpp"

namespace parahn {

LPoly::LPoly(int low, Poly p) : low_(low), p_(std::move(p)) { normalize(); }

void LPoly::normalize() {
  if (p_.is_zero()) {
    low_ = 0;
    return;
  }
  const auto& c = p_.coeffs();
  std::size_t z = 0;
  while (c[z] == 0) ++z;
  if (z > 0) {
    p_ = Poly(p_.field(), std::vector<Elem>(c.begin() + z, c.end()));
    low_ += static_cast<int>(z);
  }
}

LPoly LPoly::from_inverse(const Poly& q) {
  if (q.is_zero()) return LPoly(q.field());
  return LPoly(-q.deg(), q.reversed(q.deg()));
}

LPoly LPoly::shifted(int k) const {
  if (p_.is_zero()) return *this;
  LPoly r = *this;
  r.low_ += k;
  return r;
}

Poly LPoly::to_poly() const {
  if (p_.is_zero()) return p_;
  if (low_ < 0) throw InvalidDegree("Laurent polynomial has negative powers: " + str());
  return p_.shifted(low_);
}

Poly LPoly::to_inverse_poly() const {
  if (p_.is_zero()) return p_;
  if (high() > 0) throw InvalidDegree("Laurent polynomial has positive powers: " + str());
  // coefficient of t^-i becomes coefficient of s^i
  return p_.reversed(p_.deg()).shifted(-high());
}

LPoly& LPoly::operator+=(const LPoly& o) {
  if (o.p_.is_zero()) return *this;
  if (p_.is_zero()) return *this = o;
  int lo = std::min(low_, o.low_);
  p_ = p_.shifted(low_ - lo) + o.p_.shifted(o.low_ - lo);
  low_ = lo;
  normalize();
  return *this;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.p_.is_zero() || b.p_.is_zero()) return LPoly(a.p_.field());
  return LPoly(a.low_ + b.low_, a.p_ * b.p_);
}

std::string LPoly::str() const {
  if (p_.is_zero()) return "0";
  if (low_ == 0) return p_.str();
  return "t^" + std::to_string(low_) + "*(" + p_.str() + ")";
}

LMat LMat::from_poly(const PolyMat& m) {
  LMat r(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = LPoly(0, m.at(i, j));
  }
  return r;
}

LMat LMat::from_inverse_poly(const PolyMat& m) {
  LMat r(m.field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = LPoly::from_inverse(m.at(i, j));
  }
  return r;
}

LMat LMat::identity(const Field& f, std::size_t n) {
  return from_poly(PolyMat::identity(f, n));
}

LMat LMat::transpose() const {
  LMat t(*f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

int LMat::min_low() const {
  int lo = INT_MAX;
  for (const auto& e : a_) {
    if (!e.is_zero()) lo = std::min(lo, e.low());
  }
  return lo == INT_MAX ? 0 : lo;
}

int LMat::max_high() const {
  int hi = INT_MIN;
  for (const auto& e : a_) {
    if (!e.is_zero()) hi = std::max(hi, e.high());
  }
  return hi == INT_MIN ? 0 : hi;
}

PolyMat LMat::to_poly() const {
  PolyMat m(*f_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).to_poly();
  }
  return m;
}

std::string LMat::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
  }
  return s + "]";
}

LMat operator*(const LMat& a, const LMat& b) {
  if (a.f_ != b.f_) throw FieldMismatch("Laurent matrix product over different fields");
  if (a.cols_ != b.rows_) throw ShapeMismatch("Laurent matrix product shape");
  LMat c(*a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return c;
}

LMat lmat_diag_monomials(const Field& f, const std::vector<int>& exps) {
  LMat d(f, exps.size(), exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) d.at(i, i) = LPoly(exps[i], Poly::constant(f, 1));
  return d;
}

LPoly lmat_det(const LMat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
  int shift = std::max(0, -m.min_low());
  LMat s = m * lmat_diag_monomials(m.field(), std::vector<int>(m.cols(), shift));
  return LPoly(-shift * static_cast<int>(m.rows()), det(s.to_poly()));
}

namespace {

// Column reduction of a square polynomial matrix with nonzero determinant:
// P * U is column reduced. Returns column degrees.
std::vector<int> column_reduce(PolyMat& P, PolyMat& U, PolyMat& U_inv) {
  const Field& f = P.field();
  std::size_t m = P.rows();
  while (true) {
    std::vector<int> k(m);
    for (std::size_t j = 0; j < m; ++j) {
      int d = kDegNegInf;
      for (std::size_t i = 0; i < m; ++i) d = std::max(d, P.at(i, j).deg());
      if (d == kDegNegInf) throw NotInvertible("zero column during column reduction");
      k[j] = d;
    }
    Mat H(f, m, m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) H.at(i, j) = P.at(i, j).coeff(k[j]);
    }
    Mat ns = nullspace(H);
    if (ns.rows() == 0) return k;
    auto alpha = ns.row(0);
    std::size_t piv = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (alpha[j] != 0 && (piv == m || k[j] > k[piv])) piv = j;
    }
    Elem ai = f.inv(alpha[piv]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == piv || alpha[i] == 0) continue;
      Poly c = Poly::monomial(f, f.mul(alpha[i], ai), k[piv] - k[i]);
      for (std::size_t r = 0; r < m; ++r) {
        if (!P.at(r, i).is_zero()) P.at(r, piv) += c * P.at(r, i);
        if (!U.at(r, i).is_zero()) U.at(r, piv) += c * U.at(r, i);
      }
      for (std::size_t cidx = 0; cidx < m; ++cidx) {
        if (!U_inv.at(piv, cidx).is_zero()) U_inv.at(i, cidx) -= c * U_inv.at(piv, cidx);
      }
    }
  }
}

}  // namespace

Birkhoff birkhoff_factorize(const LMat& T) {
  if (T.rows() != T.cols()) throw ShapeMismatch("transition matrix must be square");
  const Field& f = T.field();
  std::size_t m = T.rows();
  if (m == 0) return {{}, T, T, T};
  LPoly d = lmat_det(T);
  if (d.is_zero() || d.body().deg() != 0) {
    throw NotInvertible("determinant " + d.str() + " is not a unit monomial");
  }
  int N = std::max(0, -T.min_low());
  LMat shifted = T * lmat_diag_monomials(f, std::vector<int>(m, N));
  PolyMat P = shifted.to_poly().transpose();
  PolyMat U = PolyMat::identity(f, m), U_inv = PolyMat::identity(f, m);
  std::vector<int> k = column_reduce(P, U, U_inv);

  // P = L diag(t^k) U^-1 with L = P diag(t^-k) over F[1/t]
  std::vector<int> neg(m);
  for (std::size_t j = 0; j < m; ++j) neg[j] = -k[j];
  LMat L = LMat::from_poly(P) * lmat_diag_monomials(f, neg);
  LMat A_plus = LMat::from_poly(U_inv.transpose());
  LMat A_plus_inv = LMat::from_poly(U.transpose());
  LMat A_minus = L.transpose();

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return k[a] > k[b]; });
  Birkhoff out{std::vector<int>(m), LMat(f, m, m), LMat(f, m, m), LMat(f, m, m)};
  for (std::size_t pos = 0; pos < m; ++pos) {
    std::size_t src = order[pos];
    out.twists[pos] = k[src] - N;
    for (std::size_t r = 0; r < m; ++r) {
      out.A_plus.at(r, pos) = A_plus.at(r, src);
      out.A_minus.at(pos, r) = A_minus.at(src, r);
      out.A_plus_inv.at(pos, r) = A_plus_inv.at(src, r);
    }
  }
  return out;
}

}  // namespace parahn
