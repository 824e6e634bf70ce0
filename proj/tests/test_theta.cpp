#include <doctest.h>

#include "fixtures.hpp"
#include "window.hpp"
#include "parahn/errors.hpp"
#include "parahn/hn.hpp"
#include "parahn/theta.hpp"

using namespace parahn;
using namespace fixtures;

namespace {

ThetaFiltration one_step(const Subbundle& W, int m = 1) { return {{{m, W}}}; }

// degree -1 line spanned by (t, 1) in O + O
Subbundle tilted(const ParabolicBundle& V) {
  const Field& f = V.field();
  PolyMat m(f, 2, 1);
  m.at(0, 0) = poly(f, {0, 1});
  m.at(1, 0) = poly(f, {1});
  return make_subbundle(V.bundle, {-1}, m);
}

}  // namespace

TEST_CASE("wt_combined examples") {
  const Field& f = field_make(3, 1);
  auto V = R1(f);
  CHECK(wt_combined(V, one_step(axis(V, 0))) == Rat(1));
  auto S = R2_special(f);
  CHECK(wt_combined(S, one_step(axis(S, 0))) == Rat(2));
  CHECK(wt_combined(V, ThetaFiltration{}) == Rat(0));
  CHECK(wt_combined(V, ThetaFiltration{{{0, whole_bundle(V.bundle)}, {1, zero_subbundle(V.bundle)}}}) == Rat(0));
  CHECK_THROWS_AS(wt_combined(V, ThetaFiltration{{{1, axis(V, 0)}, {1, zero_subbundle(V.bundle)}}}), InvalidFiltration);
  CHECK_THROWS_AS(wt_combined(V, ThetaFiltration{{{1, axis(V, 0)}, {2, axis(V, 1)}}}), InvalidFiltration);
}

TEST_CASE("wt_chi examples") {
  const Field& f = field_make(3, 1);
  auto V = R1(f);
  auto F = one_step(axis(V, 0));
  CHECK(wt_chi(V, F, 0, 1, 2) == 1);
  CHECK(wt_chi(V, F, 0, 2, 1) == -1);
  CHECK(wt_chi(V, ThetaFiltration{}, 0, 1, 2) == 0);
  CHECK_THROWS_AS(wt_chi(V, F, 0, 1, 1), BadIndex);
  CHECK_THROWS_AS(wt_chi(V, F, 0, 1, 3), BadIndex);
  CHECK_THROWS_AS(wt_chi(V, F, 1, 1, 2), BadIndex);
}

TEST_CASE("wt_det examples") {
  const Field& f = field_make(3, 1);
  auto V = R1(f);
  CHECK(wt_det(V, one_step(axis(V, 0))) == Rat(0));
  CHECK(wt_det(V, ThetaFiltration{}) == Rat(0));
  CHECK(wt_det(V, one_step(tilted(V))) == Rat(-4));
  CHECK_THROWS_AS(wt_det(R2_special(f), one_step(axis(R2_special(f), 0))), MultiplePoints);
}

TEST_CASE("chi_pairing examples") {
  std::vector<int> a{1, 1};
  CHECK(chi_pairing(2, a, quarter_weights(), 2, 1) == Rat(0));
  CHECK(chi_pairing(2, a, {Rat(1, 8), Rat(7, 8)}, 2, 1) == Rat(1));
  CHECK(chi_pairing(2, a, {Rat(1, 8), Rat(7, 8)}, 1, 2) == Rat(-1));
  CHECK_THROWS_AS(chi_pairing(2, a, quarter_weights(), 1, 1), BadIndex);
  CHECK_THROWS_AS(chi_pairing(2, a, quarter_weights(), 3, 1), BadIndex);
}

TEST_CASE("is_admissible examples") {
  std::vector<int> a{1, 1};
  auto r = is_admissible(2, a, quarter_weights());
  CHECK(r.admissible);
  REQUIRE(r.region.constraints.size() == 2);
  CHECK(r.region.constraints[0].coeffs == std::vector<Rat>{Rat(-1), Rat(1)});
  CHECK(r.region.constraints[0].relation == ">=");
  CHECK(r.region.constraints[0].rhs == Rat(1, 4));
  CHECK(r.region.constraints[1].relation == "<=");
  CHECK(r.region.constraints[1].rhs == Rat(3, 4));
  CHECK_FALSE(is_admissible(2, a, {Rat(1, 10), Rat(9, 10)}).admissible);
  CHECK(is_admissible(2, a, {Rat(1, 8), Rat(7, 8)}).admissible);
  CHECK_THROWS_AS(is_admissible(2, a, {Rat(3, 4), Rat(1, 4)}), BadWeights);
  CHECK_THROWS_AS(is_admissible(2, a, {Rat(0), Rat(1, 4)}), BadWeights);
}

TEST_CASE("admissibility agrees with the pairing bound on a grid") {
  for (auto a : std::vector<std::vector<int>>{{1, 1}, {1, 2}, {2, 1}, {1, 1, 1}, {1, 0, 2}}) {
    int n = 0;
    for (int x : a) n += x;
    std::size_t N = a.size();
    const int den = 12;
    std::vector<int> idx(N, 1);
    std::function<void(std::size_t, int)> rec = [&](std::size_t m, int lo) {
      if (m == N) {
        std::vector<Rat> w;
        for (int x : idx) w.push_back(Rat(x, den));
        bool pair_ok = true;
        for (std::size_t l = 1; l <= N; ++l) {
          for (std::size_t k = 1; k <= N; ++k) {
            if (l != k && chi_pairing(n, a, w, l, k) > Rat(1)) pair_ok = false;
          }
        }
        CHECK(is_admissible(n, a, w).admissible == pair_ok);
        return;
      }
      for (int x = lo; x < den; ++x) {
        idx[m] = x;
        rec(m + 1, x + 1);
      }
    };
    rec(0, 1);
  }
}

TEST_CASE("single-point decomposition identity") {
  std::size_t filtrations = 0;
  for (auto& inst : rank2_suite()) {
    auto& V = inst.V;
    if (V.num_points() != 1) continue;
    for (auto& W : proper_window(V)) {
      for (int m : {-1, 1, 2}) {
        CHECK(identity_gap(V, one_step(W, m)) == Rat(0));
        ++filtrations;
      }
      ThetaFiltration two{{{0, whole_bundle(V.bundle)}, {2, W}}};
      CHECK(identity_gap(V, two) == Rat(0));
      ++filtrations;
    }
  }
  const Field& f = field_make(2, 1);
  auto V = make_parabolic(split_bundle(f, {0, 0, -1}), {0},
                          {make_flag(f, 3, {1, 1, 1}, {rowvec(f, {1, 0, 1}), Mat(f, {{1, 0, 1}, {0, 1, 0}})})},
                          {{Rat(1, 5), Rat(1, 2), Rat(3, 4)}});
  auto subs = proper_window(V);
  for (auto& A : subs) {
    for (auto& B : subs) {
      if (A.rank() <= B.rank() || !contains(A, B)) continue;
      CHECK(identity_gap(V, ThetaFiltration{{{0, A}, {3, B}}}) == Rat(0));
      ++filtrations;
    }
  }
  CHECK(filtrations >= 100);
}

TEST_CASE("stability equivalence on the rank-2 suite") {
  for (auto& inst : rank2_suite()) {
    CAPTURE(inst.name);
    auto& V = inst.V;
    Rat best(0);
    bool any = false;
    for (auto& W : proper_window(V)) {
      Rat w = wt_combined(V, one_step(W));
      if (!any || w > best) best = w;
      any = true;
    }
    CHECK(is_semistable(V) == (!any || best <= Rat(0)));
    if (!is_semistable(V)) {
      auto U1 = hn_filtration(V).steps.front().sub;
      CHECK(wt_combined(V, one_step(U1)) > Rat(0));
    }
  }
}

TEST_CASE("duplicate steps leave wt_combined unchanged") {
  const Field& f = field_make(3, 1);
  for (auto& V : {R1(f), R2_special(f), R2_generic(f)}) {
    for (auto& W : proper_window(V)) {
      ThetaFiltration a{{{0, W}, {3, zero_subbundle(V.bundle)}}};
      ThetaFiltration b{{{0, W}, {1, W}, {3, zero_subbundle(V.bundle)}}};
      CHECK(wt_combined(V, a) == wt_combined(V, b));
    }
  }
}
