#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "parahn/errors.hpp"

using namespace parahn;
using namespace fixtures;

namespace {

// dim of span(rows A) ∩ span(rows B) by counting common vectors.
int brute_intersection_dim(const Mat& A, const Mat& B, std::size_t n) {
  const Field& f = A.field();
  auto span = [&](const Mat& M) {
    std::vector<std::vector<Elem>> out;
    std::size_t r = M.rows();
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) total *= f.q();
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Elem> v(n, 0);
      std::size_t c = code;
      for (std::size_t i = 0; i < r; ++i) {
        Elem s = static_cast<Elem>(c % f.q());
        c /= f.q();
        for (std::size_t j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(s, M.at(i, j)));
      }
      out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };
  auto a = span(A), b = span(B);
  std::vector<std::vector<Elem>> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  int d = 0;
  for (std::size_t s = 1; s < common.size(); s *= f.q()) ++d;
  return d;
}

// deg W + sum over points of sum_m (1 - lambda^m) b^m, with b from brute-force
// intersection counts.
Rat oracle_degree(const ParabolicBundle& V, const Subbundle& W) {
  Rat deg(W.degree());
  std::size_t n = V.rank();
  for (std::size_t i = 0; i < V.points.size(); ++i) {
    Mat wx = W.mat.eval(V.points[i]).transpose();
    int prev = 0;
    for (std::size_t m = 0; m < V.flags[i].length(); ++m) {
      int cur = brute_intersection_dim(wx, V.flags[i].chain[m], n);
      deg += (Rat(1) - V.weights[i][m]) * Rat(cur - prev);
      prev = cur;
    }
  }
  return deg;
}

std::vector<ParabolicBundle> small_bundles() {
  std::vector<ParabolicBundle> out;
  for (long p : {2, 3}) {
    const Field& f = field_make(p, 1);
    out.push_back(R1(f));
    out.push_back(R2_special(f));
    out.push_back(R2_generic(f));
    out.push_back(make_parabolic(split_bundle(f, {1, -1}), {0}, {line_flag(f, {1, 1})}, {quarter_weights()}));
    out.push_back(make_parabolic(split_bundle(f, {0, -1}), {1}, {line_flag(f, {0, 1})},
                                 {{Rat(1, 3), Rat(1, 2)}}));
  }
  const Field& f2 = field_make(2, 1);
  out.push_back(make_parabolic(split_bundle(f2, {0, 0, -1}), {0},
                               {make_flag(f2, 3, {1, 1, 1}, {rowvec(f2, {1, 0, 1}),
                                                             Mat(f2, {{1, 0, 1}, {0, 1, 0}})})},
                               {{Rat(1, 5), Rat(1, 2), Rat(3, 4)}}));
  return out;
}

std::vector<Subbundle> some_subbundles(const ParabolicBundle& V) {
  std::vector<Subbundle> out;
  int a1 = V.bundle.twists.front();
  for (int r = 1; r < V.rank(); ++r) {
    int top = 0;
    for (int j = 0; j < r; ++j) top += V.bundle.twists[j];
    for (int d = top; d >= top - 2; --d) {
      for (auto& W : enumerate_subbundles(V.bundle, r, d, d - (r - 1) * a1)) out.push_back(W);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("induced_quot_datum examples") {
  const Field& f = field_make(3, 1);
  auto V = R1(f);
  CHECK(induced_quot_datum(V, axis(V, 0)).jumps == std::vector<std::vector<int>>{{1, 0}});
  CHECK(induced_quot_datum(V, axis(V, 1)).jumps == std::vector<std::vector<int>>{{0, 1}});
  CHECK(induced_quot_datum(V, whole_bundle(V.bundle)).jumps == std::vector<std::vector<int>>{{1, 1}});
}

TEST_CASE("parabolic_degree examples") {
  const Field& f = field_make(3, 1);
  auto V = R1(f);
  CHECK(parabolic_degree(V) == Rat(1));
  CHECK(parabolic_slope(V) == Rat(1, 2));
  CHECK(parabolic_degree(V, axis(V, 0)) == Rat(3, 4));
  CHECK(oracle_degree(V, axis(V, 0)) == Rat(3, 4));
  auto R2 = R2_special(f);
  CHECK(parabolic_degree(R2) == Rat(2));
  CHECK(parabolic_slope(R2) == Rat(1));
}

TEST_CASE("relative_slope examples") {
  const Field& f = field_make(3, 1);
  auto V = R2_special(f);
  auto U = axis(V, 0);
  auto all = whole_bundle(V.bundle);
  CHECK(parabolic_degree(V, U) == Rat(3, 2));
  CHECK(relative_slope(V, U, all) == Rat(1, 2));
  CHECK(relative_slope(V, zero_subbundle(V.bundle), U) == Rat(3, 2));
  CHECK_THROWS_AS(relative_slope(V, U, U), EqualRanks);
  CHECK_THROWS_AS(relative_slope(V, U, axis(V, 1)), NotNested);
}

TEST_CASE("quotient_parabolic examples") {
  const Field& f = field_make(3, 1);
  auto V = R1(f);
  auto q1 = quotient_parabolic(V, axis(V, 0));
  CHECK(q1.rank() == 1);
  CHECK(q1.flags[0].jumps == std::vector<int>{0, 1});
  auto q2 = quotient_parabolic(V, axis(V, 1));
  CHECK(q2.flags[0].jumps == std::vector<int>{1, 0});
  CHECK_THROWS_AS(quotient_parabolic(V, whole_bundle(V.bundle)), FullRank);
  for (auto& B : {R1(f), R2_special(f), R2_generic(f)}) {
    for (std::size_t j = 0; j < 2; ++j) {
      auto W = axis(B, j);
      CHECK(parabolic_degree(B) == parabolic_degree(B, W) + parabolic_degree(quotient_parabolic(B, W)));
    }
  }
}

TEST_CASE("hom_parabolic examples") {
  const Field& f = field_make(3, 1);
  auto V = R1(f);
  auto h = hom_parabolic(V, V);
  CHECK(h.dim == 3);
  auto O1 = make_parabolic(split_bundle(f, {1}), {}, {}, {});
  auto O0 = make_parabolic(split_bundle(f, {0}), {}, {}, {});
  CHECK(hom_parabolic(O1, O0).dim == 0);
  CHECK(hom_parabolic(O0, O1).dim == 2);
  CHECK_THROWS_AS(hom_parabolic(V, R2_special(f)), IncompatibleShape);
}

TEST_CASE("direct_sum examples") {
  const Field& f = field_make(3, 1);
  auto V = R1(f);
  CHECK(direct_sum(V, zero_parabolic(V)) == V);
  CHECK(direct_sum(zero_parabolic(V), V) == V);
  auto a = subbundle_parabolic(V, axis(V, 0));
  auto b = subbundle_parabolic(V, axis(V, 1));
  auto s = direct_sum(a, b);
  CHECK(s.rank() == 2);
  CHECK(s.flags[0].jumps == std::vector<int>{1, 1});
  CHECK(parabolic_degree(s) == parabolic_degree(a) + parabolic_degree(b));
  CHECK(parabolic_degree(direct_sum(V, V)) == Rat(2) * parabolic_degree(V));
}

TEST_CASE("degree sandwich, additivity, jump sums, oracle degree") {
  for (auto& V : small_bundles()) {
    Rat d = parabolic_degree(V);
    CHECK(Rat(V.bundle.degree()) <= d);
    CHECK(d <= Rat(V.bundle.degree() + V.rank() * static_cast<int>(V.num_points())));
    for (auto& W : some_subbundles(V)) {
      auto th = induced_quot_datum(V, W);
      for (auto& b : th.jumps) CHECK(std::accumulate(b.begin(), b.end(), 0) == W.rank());
      CHECK(parabolic_degree(V, W) == oracle_degree(V, W));
      auto Q = quotient_parabolic(V, W);
      CHECK(d == parabolic_degree(V, W) + parabolic_degree(Q));
      auto Wp = subbundle_parabolic(V, W);
      CHECK(parabolic_degree(Wp) == parabolic_degree(V, W));
    }
  }
}

TEST_CASE("saturation never lowers the slope") {
  for (auto& V : small_bundles()) {
    const Field& f = V.field();
    if (V.rank() != 2) continue;
    // multiply each line subbundle by (t - c) to create torsion at c
    for (auto& W : some_subbundles(V)) {
      for (Elem c = 0; c < f.q(); ++c) {
        PolyMat M = W.mat;
        Poly lin(f, {f.neg(c), 1});
        for (std::size_t j = 0; j < 2; ++j) M.at(j, 0) = M.at(j, 0) * lin;
        std::vector<int> d{W.col_twists[0] - 1};
        // slope of the non-saturated sheaf with its intersection jumps
        Rat naive(d[0]);
        for (std::size_t i = 0; i < V.points.size(); ++i) {
          Mat mx = M.eval(V.points[i]).transpose();
          std::size_t prev = 0;
          for (std::size_t m = 0; m < V.flags[i].length(); ++m) {
            std::size_t cur = rank(mx) == 0 ? 0 : intersection_dim(mx, V.flags[i].chain[m]);
            naive += (Rat(1) - V.weights[i][m]) * Rat(static_cast<long>(cur - prev));
            prev = cur;
          }
        }
        auto S = saturate(V.bundle, d, M);
        CHECK(S == W);
        CHECK(parabolic_degree(V, S) >= naive);
        CHECK(parabolic_degree(V, S) != naive);
      }
    }
  }
}

TEST_CASE("hom dimension invariant under scalar extension") {
  auto bs = small_bundles();
  for (auto& A : bs) {
    for (auto& B : bs) {
      if (A.bundle.field != B.bundle.field || A.points != B.points) continue;
      bool same_len = true;
      for (std::size_t i = 0; i < A.points.size(); ++i) same_len = same_len && A.flags[i].length() == B.flags[i].length();
      if (!same_len) continue;
      auto h = hom_parabolic(A, B).dim;
      for (int m : {2, 3}) CHECK(hom_parabolic(extend_scalars(A, m), extend_scalars(B, m)).dim == h);
    }
  }
}

TEST_CASE("parse-level consistency errors") {
  const Field& f = field_make(3, 1);
  auto E = split_bundle(f, {0, 0});
  CHECK_THROWS_AS(make_parabolic(E, {0}, {line_flag(f, {1, 0})}, {{Rat(3, 4), Rat(1, 4)}}), ConsistencyError);
  CHECK_THROWS_AS(make_parabolic(E, {0, 0}, {line_flag(f, {1, 0}), line_flag(f, {1, 0})},
                                 {quarter_weights(), quarter_weights()}),
                  ConsistencyError);
  CHECK_THROWS_AS(make_flag(f, 2, {1, 1}, {Mat(f, {{1, 0}, {0, 1}})}), ConsistencyError);
}
