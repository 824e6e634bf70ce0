#include "parahn/parabolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "parahn/errors.hpp"

namespace parahn {

namespace {

void check_weights(const std::vector<Rat>& w, std::size_t point) {
  for (std::size_t m = 0; m < w.size(); ++m) {
    if (w[m] <= Rat(0) || w[m] >= Rat(1)) {
      throw ConsistencyError("weights[" + std::to_string(point) + "][" + std::to_string(m) +
                             "] = " + w[m].str() + " outside (0,1)");
    }
    if (m > 0 && w[m] <= w[m - 1]) {
      throw ConsistencyError("weights[" + std::to_string(point) + "] not strictly increasing");
    }
  }
}

Flag zero_flag(const Field& f, std::size_t length) {
  Flag fl;
  fl.jumps.assign(length, 0);
  fl.chain.assign(length, Mat(f, 0, 0));
  return fl;
}

// Annihilator rows: w in span(rows of B) iff C w = 0.
Mat annihilator(const Mat& B, std::size_t n) {
  if (B.rows() == 0) return Mat::identity(B.field(), n);
  return nullspace(B);
}

void check_compatible(const ParabolicBundle& A, const ParabolicBundle& B, const char* what) {
  if (A.bundle.field != B.bundle.field) throw IncompatibleShape(std::string(what) + ": different fields");
  if (A.points != B.points) throw IncompatibleShape(std::string(what) + ": different marked points");
  for (std::size_t i = 0; i < A.points.size(); ++i) {
    if (A.flags[i].length() != B.flags[i].length()) {
      throw IncompatibleShape(std::string(what) + ": chain lengths differ at point " + std::to_string(i));
    }
  }
}

}  // namespace

Flag make_flag(const Field& f, int n, std::vector<int> jumps, const std::vector<Mat>& proper) {
  if (jumps.empty()) throw ConsistencyError("flag needs at least one jump");
  if (proper.size() + 1 != jumps.size()) {
    throw ConsistencyError("flag lists " + std::to_string(proper.size()) + " subspaces for " +
                           std::to_string(jumps.size()) + " jumps");
  }
  int sum = 0;
  for (int j : jumps) {
    if (j < 0) throw ConsistencyError("negative flag jump");
    sum += j;
  }
  if (sum != n) throw ConsistencyError("flag jumps sum to " + std::to_string(sum) + ", rank is " + std::to_string(n));
  Flag fl;
  fl.jumps = std::move(jumps);
  int dim = 0;
  for (std::size_t m = 0; m < proper.size(); ++m) {
    dim += fl.jumps[m];
    const Mat& s = proper[m];
    if (s.field_ptr() != &f) throw ConsistencyError("flag subspace over a different field");
    if (s.cols() != static_cast<std::size_t>(n) && !(s.rows() == 0)) {
      throw ConsistencyError("flag subspace vectors must have length " + std::to_string(n));
    }
    Mat basis = s.rows() == 0 ? Mat(f, 0, n) : row_basis(s);
    if (static_cast<int>(basis.rows()) != dim) {
      throw ConsistencyError("flag member " + std::to_string(m) + " has dimension " + std::to_string(basis.rows()) +
                             ", jumps require " + std::to_string(dim));
    }
    if (m > 0 && !row_space_contains(basis, fl.chain.back())) {
      throw ConsistencyError("flag members are not nested");
    }
    fl.chain.push_back(basis);
  }
  fl.chain.push_back(Mat::identity(f, n));
  return fl;
}

ParabolicBundle make_parabolic(SplitBundle E, std::vector<Elem> points, std::vector<Flag> flags,
                               std::vector<std::vector<Rat>> weights) {
  if (E.field == nullptr) throw InvalidBundle("bundle without a field");
  for (std::size_t i = 1; i < E.twists.size(); ++i) {
    if (E.twists[i] > E.twists[i - 1]) throw InvalidBundle("splitting type must be nonincreasing");
  }
  if (flags.size() != points.size() || weights.size() != points.size()) {
    throw ConsistencyError("points, flags and weights must have equal length");
  }
  std::set<Elem> seen;
  for (Elem x : points) {
    if (!E.field->contains(x)) throw ConsistencyError("point " + std::to_string(x) + " is not a field element");
    if (!seen.insert(x).second) throw ConsistencyError("duplicate point " + std::to_string(x) + " in points");
  }
  std::size_t n = E.twists.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    check_weights(weights[i], i);
    const Flag& fl = flags[i];
    if (fl.jumps.size() != weights[i].size()) {
      throw ConsistencyError("flag " + std::to_string(i) + " has " + std::to_string(fl.jumps.size()) +
                             " steps but " + std::to_string(weights[i].size()) + " weights");
    }
    int dim = 0;
    for (std::size_t m = 0; m < fl.jumps.size(); ++m) {
      dim += fl.jumps[m];
      if (fl.jumps[m] < 0 || static_cast<int>(rank(fl.chain[m])) != dim) {
        throw ConsistencyError("flag " + std::to_string(i) + " dims do not match jumps");
      }
      if (fl.chain[m].rows() > 0 && (fl.chain[m].cols() != n || fl.chain[m].field_ptr() != E.field)) {
        throw ConsistencyError("flag " + std::to_string(i) + " lives in the wrong space");
      }
    }
    if (dim != static_cast<int>(n)) throw ConsistencyError("flag " + std::to_string(i) + " does not reach the fiber");
  }
  return ParabolicBundle{std::move(E), std::move(points), std::move(flags), std::move(weights)};
}

ParabolicBundle zero_parabolic(const ParabolicBundle& V) {
  ParabolicBundle z{SplitBundle{V.bundle.field, {}}, V.points, {}, V.weights};
  for (const auto& fl : V.flags) z.flags.push_back(zero_flag(V.field(), fl.length()));
  return z;
}

QuotDatum induced_quot_datum(const ParabolicBundle& V, const Subbundle& W) {
  if (W.ambient != V.bundle.twists) throw InvalidSubbundle("subbundle of a different bundle");
  QuotDatum q{W.rank(), W.degree(), {}};
  std::size_t n = V.bundle.twists.size();
  for (std::size_t i = 0; i < V.points.size(); ++i) {
    std::vector<int> b;
    if (W.is_zero()) {
      b.assign(V.flags[i].length(), 0);
    } else {
      if (W.mat.field_ptr() != V.bundle.field) throw FieldMismatch("subbundle over a different field");
      Mat wx = fiber(W, V.points[i]);
      if (rank(wx) != static_cast<std::size_t>(W.rank())) {
        throw InvalidSubbundle("fiber of the subbundle drops rank at point " + std::to_string(i));
      }
      std::size_t prev = 0;
      for (const Mat& vm : V.flags[i].chain) {
        std::size_t cur = vm.rows() == 0 ? 0 : intersection_dim(wx, vm.cols() == n ? vm : Mat(V.field(), 0, n));
        b.push_back(static_cast<int>(cur - prev));
        prev = cur;
      }
    }
    q.jumps.push_back(std::move(b));
  }
  return q;
}

QuotDatum ambient_datum(const ParabolicBundle& V) {
  QuotDatum q{V.rank(), V.bundle.degree(), {}};
  for (const auto& fl : V.flags) q.jumps.push_back(fl.jumps);
  return q;
}

Rat parabolic_degree_of(const ParabolicBundle& V, const QuotDatum& datum) {
  Rat deg(datum.degree);
  for (std::size_t i = 0; i < V.points.size(); ++i) {
    Rat corr(datum.rank);
    for (std::size_t m = 0; m < datum.jumps[i].size(); ++m) corr -= V.weights[i][m] * Rat(datum.jumps[i][m]);
    deg += corr;
  }
  return deg;
}

Rat parabolic_degree(const ParabolicBundle& V) { return parabolic_degree_of(V, ambient_datum(V)); }

Rat parabolic_degree(const ParabolicBundle& V, const Subbundle& W) {
  return parabolic_degree_of(V, induced_quot_datum(V, W));
}

Rat parabolic_slope(const ParabolicBundle& V) {
  if (V.rank() == 0) throw EqualRanks("slope of a rank-0 bundle");
  return parabolic_degree(V) / Rat(V.rank());
}

Rat parabolic_slope(const ParabolicBundle& V, const Subbundle& W) {
  if (W.rank() == 0) throw EqualRanks("slope of the zero subbundle");
  return parabolic_degree(V, W) / Rat(W.rank());
}

Rat relative_slope(const ParabolicBundle& V, const Subbundle& U, const Subbundle& W) {
  if (!contains(W, U)) throw NotNested("U is not contained in W");
  if (U.rank() == W.rank()) throw EqualRanks("U and W have equal rank");
  return (parabolic_degree(V, W) - parabolic_degree(V, U)) / Rat(W.rank() - U.rank());
}

ParabolicBundle subbundle_parabolic(const ParabolicBundle& V, const Subbundle& W) {
  if (W.is_zero()) return zero_parabolic(V);
  const Field& f = V.field();
  std::size_t n = V.bundle.twists.size(), r = W.rank();
  std::vector<Flag> flags;
  for (std::size_t i = 0; i < V.points.size(); ++i) {
    Mat A = W.mat.eval(V.points[i]);  // n x r
    Flag fl;
    std::size_t prev = 0;
    for (const Mat& vm : V.flags[i].chain) {
      Mat pre;
      if (vm.rows() == n) {
        pre = Mat::identity(f, r);
      } else {
        Mat C = annihilator(vm.rows() == 0 ? Mat(f, 0, n) : vm, n);
        pre = nullspace(C * A);
      }
      fl.jumps.push_back(static_cast<int>(pre.rows() - prev));
      prev = pre.rows();
      fl.chain.push_back(pre);
    }
    fl.chain.back() = Mat::identity(f, r);
    flags.push_back(std::move(fl));
  }
  return make_parabolic(SplitBundle{&f, W.col_twists}, V.points, std::move(flags), V.weights);
}

ParabolicBundle quotient_parabolic(const ParabolicBundle& V, const Subbundle& W) {
  Quotient qd = quotient_bundle(V.bundle, W);
  const Field& f = V.field();
  std::size_t m = qd.Q.twists.size();
  QuotDatum ind = induced_quot_datum(V, W);
  std::vector<Flag> flags;
  for (std::size_t i = 0; i < V.points.size(); ++i) {
    Mat pi = qd.proj.eval(V.points[i]);
    Flag fl;
    std::size_t prev = 0;
    for (const Mat& vm : V.flags[i].chain) {
      Mat img = vm.rows() == 0 ? Mat(f, 0, m) : image_rows(pi, vm);
      fl.jumps.push_back(static_cast<int>(img.rows() - prev));
      prev = img.rows();
      fl.chain.push_back(img);
    }
    for (std::size_t k = 0; k < fl.jumps.size(); ++k) {
      if (fl.jumps[k] != V.flags[i].jumps[k] - ind.jumps[i][k]) {
        throw Error("Internal", "quotient jumps disagree with ambient minus induced jumps");
      }
    }
    flags.push_back(std::move(fl));
  }
  return make_parabolic(qd.Q, V.points, std::move(flags), V.weights);
}

HomSpace hom_parabolic(const ParabolicBundle& A, const ParabolicBundle& B) {
  check_compatible(A, B, "hom");
  const Field& f = A.field();
  const auto& c = A.bundle.twists;
  const auto& d = B.bundle.twists;
  std::size_t na = c.size(), nb = d.size();
  // unknown index for (j, k, l)
  std::vector<std::size_t> base(nb * na + 1, 0);
  for (std::size_t j = 0; j < nb; ++j) {
    for (std::size_t k = 0; k < na; ++k) {
      base[j * na + k + 1] = base[j * na + k] + static_cast<std::size_t>(std::max(0, d[j] - c[k] + 1));
    }
  }
  std::size_t unknowns = base.back();
  Mat sys(f, 0, unknowns);
  for (std::size_t i = 0; i < A.points.size(); ++i) {
    Elem x = A.points[i];
    for (std::size_t m = 0; m < A.flags[i].length(); ++m) {
      const Mat& am = A.flags[i].chain[m];
      const Mat& bm = B.flags[i].chain[m];
      if (am.rows() == 0 || bm.rows() == nb) continue;
      Mat C = annihilator(bm.rows() == 0 ? Mat(f, 0, nb) : bm, nb);
      for (std::size_t v = 0; v < am.rows(); ++v) {
        for (std::size_t cr = 0; cr < C.rows(); ++cr) {
          std::vector<Elem> row(unknowns, 0);
          for (std::size_t j = 0; j < nb; ++j) {
            if (C.at(cr, j) == 0) continue;
            for (std::size_t k = 0; k < na; ++k) {
              Elem cv = f.mul(C.at(cr, j), am.at(v, k));
              if (cv == 0) continue;
              Elem xp = 1;
              for (std::size_t u = base[j * na + k]; u < base[j * na + k + 1]; ++u) {
                row[u] = f.add(row[u], f.mul(cv, xp));
                xp = f.mul(xp, x);
              }
            }
          }
          sys.append_row(row);
        }
      }
    }
  }
  Mat basis = nullspace(sys);
  return HomSpace{basis.rows(), basis};
}

ParabolicBundle direct_sum(const ParabolicBundle& A, const ParabolicBundle& B) {
  check_compatible(A, B, "direct_sum");
  if (A.weights != B.weights) throw IncompatibleShape("direct_sum: different weights");
  if (A.rank() == 0) return B;
  if (B.rank() == 0) return A;
  const Field& f = A.field();
  std::size_t na = A.rank(), nb = B.rank(), n = na + nb;
  std::vector<int> tw = A.bundle.twists;
  tw.insert(tw.end(), B.bundle.twists.begin(), B.bundle.twists.end());
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return tw[x] > tw[y]; });
  std::vector<int> sorted(n);
  for (std::size_t p = 0; p < n; ++p) sorted[p] = tw[order[p]];
  std::vector<Flag> flags;
  for (std::size_t i = 0; i < A.points.size(); ++i) {
    Flag fl;
    for (std::size_t m = 0; m < A.flags[i].length(); ++m) {
      fl.jumps.push_back(A.flags[i].jumps[m] + B.flags[i].jumps[m]);
      Mat blocks(f, 0, n);
      const Mat& am = A.flags[i].chain[m];
      const Mat& bm = B.flags[i].chain[m];
      for (std::size_t r = 0; r < am.rows(); ++r) {
        std::vector<Elem> v(n, 0);
        for (std::size_t k = 0; k < na; ++k) v[k] = am.at(r, k);
        blocks.append_row(v);
      }
      for (std::size_t r = 0; r < bm.rows(); ++r) {
        std::vector<Elem> v(n, 0);
        for (std::size_t k = 0; k < nb; ++k) v[na + k] = bm.at(r, k);
        blocks.append_row(v);
      }
      Mat perm(f, blocks.rows(), n);
      for (std::size_t r = 0; r < blocks.rows(); ++r) {
        for (std::size_t p = 0; p < n; ++p) perm.at(r, p) = blocks.at(r, order[p]);
      }
      fl.chain.push_back(row_basis(perm));
    }
    flags.push_back(std::move(fl));
  }
  return make_parabolic(SplitBundle{&f, sorted}, A.points, std::move(flags), A.weights);
}

ParabolicBundle extend_scalars(const ParabolicBundle& V, int m) {
  const Field& big = field_extend(V.field(), m);
  ParabolicBundle out = V;
  out.bundle.field = &big;
  for (auto& x : out.points) x = embed(V.field(), big, x);
  for (auto& fl : out.flags) {
    for (auto& s : fl.chain) s = s.field_ptr() ? mat_embed(s, big) : s;
  }
  return out;
}

}  // namespace parahn
