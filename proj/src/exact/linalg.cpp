#include "parahn/linalg.hpp"

#include <algorithm>

#include "parahn/errors.hpp"

namespace parahn {

Mat::Mat(const Field& f, const std::vector<std::vector<Elem>>& rows) : f_(&f), rows_(rows.size()) {
  cols_ = rows.empty() ? 0 : rows[0].size();
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeMismatch("ragged matrix rows");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<Elem> Mat::row(std::size_t i) const {
  return std::vector<Elem>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

std::vector<std::vector<Elem>> Mat::to_rows() const {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void Mat::append_row(const std::vector<Elem>& r) {
  if (r.size() != cols_) throw ShapeMismatch("row length " + std::to_string(r.size()) + " vs " + std::to_string(cols_));
  a_.insert(a_.end(), r.begin(), r.end());
  ++rows_;
}

Mat Mat::transpose() const {
  Mat t(*f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

Mat Mat::take_rows(std::size_t n) const {
  Mat t(*f_, n, cols_);
  std::copy(a_.begin(), a_.begin() + n * cols_, t.a_.begin());
  return t;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.f_ != b.f_) throw FieldMismatch("matrix product over different fields");
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape");
  const Field& f = *a.f_;
  Mat c(f, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      Elem x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(x, b.at(k, j)));
    }
  }
  return c;
}

bool operator<(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.a_ < b.a_;
}

std::string Mat::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + std::to_string(at(i, j));
    s += "]";
  }
  return s + "]";
}

Rref rref(const Mat& m) {
  Rref out{m, 0, {}};
  if (m.rows() == 0 || m.cols() == 0) return out;
  Mat& a = out.R;
  const Field& f = m.field();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
    }
    Elem inv = f.inv(a.at(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) = f.mul(a.at(r, j), inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Elem x = f.neg(a.at(i, c));
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) = f.add(a.at(i, j), f.mul(x, a.at(r, j)));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  return out;
}

Mat row_basis(const Mat& m) {
  auto r = rref(m);
  if (m.field_ptr() == nullptr) return m;
  return r.R.take_rows(r.rank);
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat nullspace(const Mat& m) {
  const Field& f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Mat ns(f, 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.R.at(i, free));
    ns.append_row(v);
  }
  return row_basis(ns);
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.field_ptr() != b.field_ptr()) throw FieldMismatch("vstack over different fields");
  if (a.cols() != b.cols()) throw ShapeMismatch("vstack column counts differ");
  Mat c = a;
  for (std::size_t i = 0; i < b.rows(); ++i) c.append_row(b.row(i));
  return c;
}

bool row_space_contains(const Mat& big, const Mat& small) {
  return rank(vstack(big, small)) == rank(big);
}

std::size_t intersection_dim(const Mat& a, const Mat& b) {
  return rank(a) + rank(b) - rank(vstack(a, b));
}

Mat image_rows(const Mat& m, const Mat& basis) {
  // rows of basis are vectors x; images are (m x)^T = x^T m^T
  return row_basis(basis * m.transpose());
}

Mat mat_embed(const Mat& m, const Field& big) {
  Mat r(big, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = embed(m.field(), big, m.at(i, j));
  }
  return r;
}

}  // namespace parahn
