#include "parahn/sheaves.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "parahn/errors.hpp"

namespace parahn {

namespace {

std::vector<std::size_t> offsets(const std::vector<int>& a, int N, std::size_t& total) {
  std::vector<std::size_t> off(a.size());
  total = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    off[j] = total;
    total += static_cast<std::size_t>(std::max(0, a[j] + N + 1));
  }
  return off;
}

void check_shape(const std::vector<int>& a, const std::vector<int>& d, const PolyMat& M) {
  if (M.rows() != a.size() || M.cols() != d.size()) {
    throw ShapeMismatch("matrix is " + std::to_string(M.rows()) + "x" + std::to_string(M.cols()) + ", expected " +
                        std::to_string(a.size()) + "x" + std::to_string(d.size()));
  }
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t k = 0; k < d.size(); ++k) {
      const Poly& e = M.at(j, k);
      if (!e.is_zero() && e.deg() > a[j] - d[k]) {
        throw DegreeBoundViolated("entry (" + std::to_string(j) + "," + std::to_string(k) + ") has degree " +
                                  std::to_string(e.deg()) + " > " + std::to_string(a[j] - d[k]));
      }
    }
  }
}

bool minors_condition(const std::vector<int>& a, const std::vector<int>& d, const PolyMat& M) {
  std::size_t r = d.size(), n = a.size();
  if (r == 0) return true;
  if (r > n) return false;
  int sum_d = std::accumulate(d.begin(), d.end(), 0);
  if (r == 1) {
    bool top = false;
    Poly g(M.field());
    for (std::size_t j = 0; j < n; ++j) {
      const Poly& e = M.at(j, 0);
      if (e.is_zero()) continue;
      if (e.deg() == a[j] - sum_d) top = true;
      g = poly_gcd(g, e);
    }
    return top && g.deg() == 0;
  }
  bool top = false;
  Poly g(M.field());
  for (const auto& mn : maximal_minors(M)) {
    if (mn.value.is_zero()) continue;
    int hom = -sum_d;
    for (auto j : mn.rows) hom += a[j];
    if (mn.value.deg() == hom) top = true;
    if (g.deg() != 0) g = poly_gcd(g, mn.value);
    if (top && g.deg() == 0) return true;
  }
  return top && g.deg() == 0;
}

// Builds the canonical matrix of a subsheaf from its section spaces S(c) =
// H^0(F(-c)), scanning c downward until r columns are found.
std::pair<std::vector<int>, PolyMat> assemble(const Field& f, const std::vector<int>& a, std::size_t r, int c_hi,
                                              int c_lo, const std::function<Mat(int)>& S) {
  std::size_t n = a.size();
  std::vector<int> d;
  std::vector<std::vector<Poly>> cols;
  auto current = [&] {
    PolyMat M(f, n, cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      for (std::size_t j = 0; j < n; ++j) M.at(j, k) = cols[k][j];
    }
    return M;
  };
  for (int c = c_hi; c >= c_lo && cols.size() < r; --c) {
    std::size_t total;
    auto off = offsets(a, -c, total);
    if (total == 0) continue;
    Mat s = S(c);
    if (s.rows() == 0) continue;
    Rref g = rref(section_space(a, d, current(), -c));
    Mat red = s;
    for (std::size_t i = 0; i < red.rows(); ++i) {
      for (std::size_t p = 0; p < g.rank; ++p) {
        Elem x = red.at(i, g.pivots[p]);
        if (x == 0) continue;
        Elem nx = f.neg(x);
        for (std::size_t j = 0; j < total; ++j) red.at(i, j) = f.add(red.at(i, j), f.mul(nx, g.R.at(p, j)));
      }
    }
    Rref fresh = rref(red);
    for (std::size_t i = 0; i < fresh.rank; ++i) {
      std::vector<Poly> col;
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Elem> coeffs;
        for (int l = 0; l <= a[j] - c; ++l) coeffs.push_back(fresh.R.at(i, off[j] + l));
        col.emplace_back(f, coeffs);
      }
      cols.push_back(std::move(col));
      d.push_back(c);
    }
  }
  if (cols.size() != r) throw Error("Internal", "canonical assembly found " + std::to_string(cols.size()) +
                                                    " columns, expected " + std::to_string(r));
  return {d, current()};
}

Subbundle finish(const Field& f, const std::vector<int>& a, std::vector<int> d, PolyMat M) {
  Subbundle W;
  W.ambient = a;
  W.col_twists = std::move(d);
  W.mat = std::move(M);
  W.key_twist = key_twist(a, W.col_twists);
  W.key = W.is_zero() ? Mat(f, 0, 0) : section_space(a, W.col_twists, W.mat, W.key_twist);
  return W;
}

Subbundle canonicalize(const Field& f, const std::vector<int>& a, const std::vector<int>& d, const PolyMat& M) {
  if (d.empty()) return finish(f, a, {}, PolyMat(f, a.size(), 0));
  int lo = *std::min_element(d.begin(), d.end());
  auto [cd, cm] = assemble(f, a, d.size(), a.front(), lo, [&](int c) { return section_space(a, d, M, -c); });
  return finish(f, a, std::move(cd), std::move(cm));
}

std::uint64_t sat_mul(std::uint64_t x, std::uint64_t y) {
  if (x == 0 || y == 0) return 0;
  if (x > std::numeric_limits<std::uint64_t>::max() / y) return std::numeric_limits<std::uint64_t>::max();
  return x * y;
}

std::uint64_t sat_add(std::uint64_t x, std::uint64_t y) {
  return x > std::numeric_limits<std::uint64_t>::max() - y ? std::numeric_limits<std::uint64_t>::max() : x + y;
}

// Projective points of F_q^m, one representative each (first nonzero = 1).
std::uint64_t projective_count(std::uint64_t q, std::size_t m) {
  std::uint64_t s = 0, pw = 1;
  for (std::size_t i = 0; i < m; ++i) {
    s = sat_add(s, pw);
    pw = sat_mul(pw, q);
  }
  return s;
}

void for_each_twist_vector(int r, int d, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int upper) {
    int k = static_cast<int>(cur.size());
    if (k == r) {
      if (remaining == 0) fn(cur);
      return;
    }
    int slots = r - k;
    for (int v = upper; v >= lo; --v) {
      // the remaining slots after this one take values in [lo, v]
      long rest = static_cast<long>(remaining) - v;
      if (rest < static_cast<long>(slots - 1) * lo) continue;
      if (rest > static_cast<long>(slots - 1) * v) break;
      cur.push_back(v);
      rec(static_cast<int>(rest), v);
      cur.pop_back();
    }
  };
  rec(d, hi);
}

std::size_t column_dim(const std::vector<int>& a, int dk) {
  std::size_t m = 0;
  for (int aj : a) m += static_cast<std::size_t>(std::max(0, aj - dk + 1));
  return m;
}

}  // namespace

int SplitBundle::degree() const { return std::accumulate(twists.begin(), twists.end(), 0); }

int Subbundle::degree() const { return std::accumulate(col_twists.begin(), col_twists.end(), 0); }

bool operator<(const Subbundle& a, const Subbundle& b) {
  if (a.rank() != b.rank()) return a.rank() < b.rank();
  if (a.key_twist != b.key_twist) return a.key_twist < b.key_twist;
  if (a.key == b.key) return a.col_twists > b.col_twists;
  return a.key < b.key;
}

SplitBundle split_bundle(const Field& f, std::vector<int> twists) {
  if (twists.empty()) throw InvalidBundle("splitting type must have rank >= 1");
  for (std::size_t i = 1; i < twists.size(); ++i) {
    if (twists[i] > twists[i - 1]) throw InvalidBundle("splitting type must be nonincreasing");
  }
  return SplitBundle{&f, std::move(twists)};
}

int key_twist(const std::vector<int>& ambient, const std::vector<int>& d) {
  if (d.empty() || ambient.empty()) return 0;
  int amax = *std::max_element(ambient.begin(), ambient.end());
  int dmin = *std::min_element(d.begin(), d.end());
  return std::max(1 + amax - dmin, -dmin);
}

Mat section_space(const std::vector<int>& a, const std::vector<int>& d, const PolyMat& M, int N) {
  const Field& f = M.field();
  std::size_t total;
  auto off = offsets(a, N, total);
  Mat S(f, 0, total);
  for (std::size_t k = 0; k < d.size(); ++k) {
    for (int i = 0; i <= d[k] + N; ++i) {
      std::vector<Elem> v(total, 0);
      for (std::size_t j = 0; j < a.size(); ++j) {
        const auto& c = M.at(j, k).coeffs();
        for (std::size_t l = 0; l < c.size(); ++l) v[off[j] + l + i] = c[l];
      }
      S.append_row(v);
    }
  }
  return row_basis(S);
}

bool subbundle_validate(const SplitBundle& E, const std::vector<int>& d, const PolyMat& M) {
  check_shape(E.twists, d, M);
  return minors_condition(E.twists, d, M);
}

Subbundle make_subbundle(const SplitBundle& E, const std::vector<int>& d, const PolyMat& M) {
  if (M.field_ptr() != E.field) throw FieldMismatch("subbundle matrix over a different field");
  if (!subbundle_validate(E, d, M)) throw InvalidSubbundle("matrix does not define a subbundle (torsion cokernel)");
  return canonicalize(*E.field, E.twists, d, M);
}

Subbundle zero_subbundle(const SplitBundle& E) {
  return finish(*E.field, E.twists, {}, PolyMat(*E.field, E.twists.size(), 0));
}

Subbundle whole_bundle(const SplitBundle& E) {
  return canonicalize(*E.field, E.twists, E.twists, PolyMat::identity(*E.field, E.twists.size()));
}

const Mat& canonical_key(const SplitBundle&, const Subbundle& W) { return W.key; }

bool contains(const Subbundle& W, const Subbundle& U) {
  if (W.ambient != U.ambient) throw ShapeMismatch("subbundles of different bundles");
  if (U.is_zero()) return true;
  if (W.is_zero() || U.rank() > W.rank()) return false;
  if (U.rank() == W.rank()) return U == W;
  int N = std::max(W.key_twist, U.key_twist);
  Mat sw = N == W.key_twist ? W.key : section_space(W.ambient, W.col_twists, W.mat, N);
  Mat su = N == U.key_twist ? U.key : section_space(U.ambient, U.col_twists, U.mat, N);
  return row_space_contains(sw, su);
}

std::uint64_t count_candidates(const SplitBundle& E, int r, int d, int min_col_twist) {
  std::uint64_t total = 0;
  std::uint64_t q = E.field->q();
  for_each_twist_vector(r, d, min_col_twist, E.twists.front(), [&](const std::vector<int>& dv) {
    std::uint64_t c = 1;
    for (int dk : dv) c = sat_mul(c, projective_count(q, column_dim(E.twists, dk)));
    total = sat_add(total, c);
  });
  return total;
}

std::vector<Subbundle> enumerate_subbundles(const SplitBundle& E, int r, int d, int min_col_twist,
                                            const Budget& budget) {
  int n = E.rank();
  if (r < 1 || r > n) throw ShapeMismatch("rank " + std::to_string(r) + " outside [1, " + std::to_string(n) + "]");
  if (r == n) {
    if (d == E.degree()) return {whole_bundle(E)};
    return {};
  }
  std::uint64_t count = count_candidates(E, r, d, min_col_twist);
  if (count > budget.cap) throw BudgetExceeded(count, budget.cap);

  const Field& f = *E.field;
  const auto& a = E.twists;
  std::uint32_t q = f.q();
  std::map<std::pair<int, Mat>, Subbundle> found;

  for_each_twist_vector(r, d, min_col_twist, a.front(), [&](const std::vector<int>& dv) {
    std::vector<std::size_t> dims;
    for (int dk : dv) dims.push_back(column_dim(a, dk));
    for (auto m : dims) {
      if (m == 0) return;
    }
    PolyMat M(f, a.size(), dv.size());
    // column k coordinates: rows j, coefficients 0..a_j - d_k
    auto set_column = [&](std::size_t k, const std::vector<Elem>& v) {
      std::size_t pos = 0;
      for (std::size_t j = 0; j < a.size(); ++j) {
        int len = std::max(0, a[j] - dv[k] + 1);
        M.at(j, k) = Poly(f, std::vector<Elem>(v.begin() + pos, v.begin() + pos + len));
        pos += len;
      }
    };
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
      if (k == dv.size()) {
        if (!minors_condition(a, dv, M)) return;
        Subbundle W = canonicalize(f, a, dv, M);
        auto key = std::make_pair(W.key_twist, W.key);
        found.emplace(std::move(key), std::move(W));
        return;
      }
      std::size_t m = dims[k];
      std::vector<Elem> v(m, 0);
      for (std::size_t lead = 0; lead < m; ++lead) {
        std::fill(v.begin(), v.end(), 0);
        v[lead] = 1;
        while (true) {
          set_column(k, v);
          rec(k + 1);
          std::size_t i = m;
          bool carry = true;
          while (carry && i > lead + 1) {
            --i;
            if (++v[i] < q) carry = false;
            else v[i] = 0;
          }
          if (carry) break;
        }
      }
    };
    rec(0);
  });

  std::vector<Subbundle> out;
  for (auto& kv : found) out.push_back(std::move(kv.second));
  std::sort(out.begin(), out.end());
  return out;
}

Subbundle saturate(const SplitBundle& E, const std::vector<int>& d, const PolyMat& M) {
  check_shape(E.twists, d, M);
  const Field& f = *E.field;
  const auto& a = E.twists;
  std::size_t n = a.size(), r = d.size();
  if (r == 0) return zero_subbundle(E);
  bool injective = false;
  if (r <= n) {
    for (const auto& mn : maximal_minors(M)) {
      if (!mn.value.is_zero()) {
        injective = true;
        break;
      }
    }
  }
  if (!injective) throw NotInjective("all maximal minors vanish identically");
  Smith s = smith_form(M);
  // rows r..n-1 of U^-1 cut out the generic column span
  std::size_t kr = n - r;
  std::vector<std::vector<Poly>> K(kr);
  int kdeg = 0;
  for (std::size_t i = 0; i < kr; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      K[i].push_back(s.U_inv.at(r + i, j));
      kdeg = std::max(kdeg, K[i][j].deg());
    }
  }
  auto S = [&](int c) {
    std::size_t total;
    auto off = offsets(a, -c, total);
    int vdeg = 0;
    for (int aj : a) vdeg = std::max(vdeg, aj - c);
    std::size_t per = static_cast<std::size_t>(kdeg + vdeg + 1);
    Mat sys(f, kr * per, total);
    for (std::size_t i = 0; i < kr; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& kc = K[i][j].coeffs();
        for (std::size_t e = 0; e < kc.size(); ++e) {
          if (kc[e] == 0) continue;
          for (int l = 0; l <= a[j] - c; ++l) {
            Elem& x = sys.at(i * per + e + l, off[j] + l);
            x = f.add(x, kc[e]);
          }
        }
      }
    }
    return nullspace(sys);
  };
  int lo = *std::min_element(d.begin(), d.end());
  auto [cd, cm] = assemble(f, a, r, a.front(), lo, S);
  return finish(f, a, std::move(cd), std::move(cm));
}

Mat fiber(const Subbundle& W, Elem x) { return W.mat.eval(x).transpose(); }

Quotient quotient_bundle(const SplitBundle& E, const Subbundle& W) {
  const Field& f = *E.field;
  const auto& a = E.twists;
  std::size_t n = a.size(), r = W.col_twists.size();
  if (r >= n) throw FullRank("quotient by a full-rank subbundle");
  if (W.ambient != a) throw ShapeMismatch("subbundle of a different bundle");
  std::size_t m = n - r;

  PolyMat pi0(f, m, n);
  if (r == 0) {
    pi0 = PolyMat::identity(f, n);
  } else {
    Smith s0 = smith_form(W.mat);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) pi0.at(i, j) = s0.U_inv.at(r + i, j);
    }
  }
  PolyMat sigma(f, n, m);
  if (r == 0) {
    sigma = PolyMat::identity(f, n);
  } else {
    PolyMat Minf(f, n, r);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < r; ++k) {
        const Poly& e = W.mat.at(j, k);
        if (!e.is_zero()) Minf.at(j, k) = e.reversed(a[j] - W.col_twists[k]);
      }
    }
    Smith si = smith_form(Minf);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < m; ++i) sigma.at(j, i) = si.U.at(j, r + i);
    }
  }
  LMat T = LMat::from_poly(pi0) * lmat_diag_monomials(f, a) * LMat::from_inverse_poly(sigma);
  Birkhoff b = birkhoff_factorize(T);
  PolyMat proj = (b.A_plus_inv * LMat::from_poly(pi0)).to_poly();
  return Quotient{SplitBundle{&f, b.twists}, proj, T, b};
}

SplitBundle extend_scalars(const SplitBundle& E, int m) {
  return SplitBundle{&field_extend(*E.field, m), E.twists};
}

Subbundle extend_scalars(const Subbundle& W, int m) {
  const Field& big = field_extend(W.field(), m);
  Subbundle out = W;
  out.mat = polymat_embed(W.mat, big);
  out.key = mat_embed(W.key, big);
  return out;
}

}  // namespace parahn
