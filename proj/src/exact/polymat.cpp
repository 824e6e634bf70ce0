#include "parahn/polymat.hpp"

#include <functional>
#include <utility>

#include "parahn/errors.hpp"

namespace parahn {

PolyMat PolyMat::identity(const Field& f, std::size_t n) {
  PolyMat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly::constant(f, 1);
  return m;
}

PolyMat PolyMat::from_const(const Mat& c) {
  PolyMat m(c.field(), c.rows(), c.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) m.at(i, j) = Poly::constant(c.field(), c.at(i, j));
  }
  return m;
}

PolyMat PolyMat::transpose() const {
  PolyMat t(*f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Mat PolyMat::eval(Elem x) const {
  Mat m(*f_, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).eval(x);
  }
  return m;
}

bool PolyMat::is_zero() const {
  for (const auto& p : a_) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::string PolyMat::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + at(i, j).str();
  }
  return s + "]";
}

PolyMat operator*(const PolyMat& a, const PolyMat& b) {
  if (a.f_ != b.f_) throw FieldMismatch("polynomial matrix product over different fields");
  if (a.cols_ != b.rows_) throw ShapeMismatch("polynomial matrix product shape");
  PolyMat c(*a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  }
  return c;
}

PolyMat operator+(const PolyMat& a, const PolyMat& b) {
  if (a.f_ != b.f_) throw FieldMismatch("polynomial matrix sum over different fields");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("polynomial matrix sum shape");
  PolyMat c = a;
  for (std::size_t i = 0; i < a.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

namespace {

Poly det_rec(const PolyMat& m, std::vector<std::size_t>& rows, std::vector<std::size_t>& cols) {
  const Field& f = m.field();
  if (rows.empty()) return Poly::constant(f, 1);
  if (rows.size() == 1) return m.at(rows[0], cols[0]);
  Poly acc(f);
  std::size_t r = rows.front();
  rows.erase(rows.begin());
  for (std::size_t idx = 0; idx < cols.size(); ++idx) {
    std::size_t c = cols[idx];
    if (m.at(r, c).is_zero()) continue;
    cols.erase(cols.begin() + idx);
    Poly term = m.at(r, c) * det_rec(m, rows, cols);
    cols.insert(cols.begin() + idx, c);
    if (idx % 2) acc -= term;
    else acc += term;
  }
  rows.insert(rows.begin(), r);
  return acc;
}

}  // namespace

Poly det(const PolyMat& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of non-square matrix");
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(i);
    cols.push_back(i);
  }
  return det_rec(m, rows, cols);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Minor> maximal_minors(const PolyMat& m) {
  std::vector<Minor> out;
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(j);
  for (auto& rows : subsets(m.rows(), m.cols())) {
    auto r = rows;
    out.push_back({rows, det_rec(m, r, cols)});
  }
  return out;
}

namespace {

class SmithWork {
 public:
  explicit SmithWork(const PolyMat& m)
      : f_(m.field()),
        A(m),
        L(PolyMat::identity(f_, m.rows())),
        Linv(PolyMat::identity(f_, m.rows())),
        R(PolyMat::identity(f_, m.cols())),
        Rinv(PolyMat::identity(f_, m.cols())) {}

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < A.cols(); ++c) std::swap(A.at(i, c), A.at(j, c));
    for (std::size_t c = 0; c < L.cols(); ++c) std::swap(L.at(i, c), L.at(j, c));
    for (std::size_t r = 0; r < Linv.rows(); ++r) std::swap(Linv.at(r, i), Linv.at(r, j));
  }
  // row_i += c * row_j
  void add_row(std::size_t i, std::size_t j, const Poly& c) {
    for (std::size_t k = 0; k < A.cols(); ++k) {
      if (!A.at(j, k).is_zero()) A.at(i, k) += c * A.at(j, k);
    }
    for (std::size_t k = 0; k < L.cols(); ++k) {
      if (!L.at(j, k).is_zero()) L.at(i, k) += c * L.at(j, k);
    }
    for (std::size_t r = 0; r < Linv.rows(); ++r) {
      if (!Linv.at(r, i).is_zero()) Linv.at(r, j) -= c * Linv.at(r, i);
    }
  }
  void scale_row(std::size_t i, Elem u) {
    Elem ui = f_.inv(u);
    for (std::size_t k = 0; k < A.cols(); ++k) A.at(i, k) = A.at(i, k).scaled(u);
    for (std::size_t k = 0; k < L.cols(); ++k) L.at(i, k) = L.at(i, k).scaled(u);
    for (std::size_t r = 0; r < Linv.rows(); ++r) Linv.at(r, i) = Linv.at(r, i).scaled(ui);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < A.rows(); ++r) std::swap(A.at(r, i), A.at(r, j));
    for (std::size_t r = 0; r < R.rows(); ++r) std::swap(R.at(r, i), R.at(r, j));
    for (std::size_t c = 0; c < Rinv.cols(); ++c) std::swap(Rinv.at(i, c), Rinv.at(j, c));
  }
  // col_i += c * col_j
  void add_col(std::size_t i, std::size_t j, const Poly& c) {
    for (std::size_t r = 0; r < A.rows(); ++r) {
      if (!A.at(r, j).is_zero()) A.at(r, i) += c * A.at(r, j);
    }
    for (std::size_t r = 0; r < R.rows(); ++r) {
      if (!R.at(r, j).is_zero()) R.at(r, i) += c * R.at(r, j);
    }
    for (std::size_t k = 0; k < Rinv.cols(); ++k) {
      if (!Rinv.at(i, k).is_zero()) Rinv.at(j, k) -= c * Rinv.at(i, k);
    }
  }

  void run() {
    std::size_t n = A.rows(), m = A.cols();
    for (std::size_t k = 0; k < std::min(n, m); ++k) {
      while (true) {
        std::size_t bi = n, bj = m;
        int best = 0;
        for (std::size_t i = k; i < n; ++i) {
          for (std::size_t j = k; j < m; ++j) {
            const Poly& e = A.at(i, j);
            if (!e.is_zero() && (bi == n || e.deg() < best)) {
              bi = i;
              bj = j;
              best = e.deg();
            }
          }
        }
        if (bi == n) return;
        swap_rows(k, bi);
        swap_cols(k, bj);
        bool clean = true;
        for (std::size_t i = k + 1; i < n; ++i) {
          if (A.at(i, k).is_zero()) continue;
          auto [q, r] = poly_divmod(A.at(i, k), A.at(k, k));
          add_row(i, k, -q);
          if (!r.is_zero()) clean = false;
        }
        for (std::size_t j = k + 1; j < m; ++j) {
          if (A.at(k, j).is_zero()) continue;
          auto [q, r] = poly_divmod(A.at(k, j), A.at(k, k));
          add_col(j, k, -q);
          if (!r.is_zero()) clean = false;
        }
        if (!clean) continue;
        bool divides = true;
        for (std::size_t i = k + 1; i < n && divides; ++i) {
          for (std::size_t j = k + 1; j < m; ++j) {
            if (!poly_divmod(A.at(i, j), A.at(k, k)).second.is_zero()) {
              add_row(k, i, Poly::constant(f_, 1));
              divides = false;
              break;
            }
          }
        }
        if (divides) break;
      }
      scale_row(k, f_.inv(A.at(k, k).lead()));
    }
  }

  const Field& f_;
  PolyMat A, L, Linv, R, Rinv;
};

}  // namespace

Smith smith_form(const PolyMat& m) {
  SmithWork w(m);
  w.run();
  return {w.Linv, w.A, w.Rinv, w.L, w.R};
}

PolyMat polymat_embed(const PolyMat& m, const Field& big) {
  PolyMat r(big, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = poly_embed(m.at(i, j), big);
  }
  return r;
}

}  // namespace parahn
