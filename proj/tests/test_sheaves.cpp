#include <doctest.h>

#include <random>

#include "parahn/errors.hpp"
#include "parahn/sheaves.hpp"

using namespace parahn;

namespace {

Poly P(const Field& f, std::vector<long> c) {
  std::vector<Elem> e;
  for (long x : c) e.push_back(f.from_int(x));
  return Poly(f, e);
}

PolyMat column(const Field& f, std::vector<std::vector<long>> entries) {
  PolyMat m(f, entries.size(), 1);
  for (std::size_t j = 0; j < entries.size(); ++j) m.at(j, 0) = P(f, entries[j]);
  return m;
}

// Independent count of rank-1 subbundles O(d) -> E: all nonzero columns with
// coprime entries reaching the degree bound somewhere, modulo scalars.
long brute_line_count(const SplitBundle& E, int d) {
  const Field& f = *E.field;
  std::vector<int> lens;
  int total = 0;
  for (int aj : E.twists) {
    lens.push_back(std::max(0, aj - d + 1));
    total += lens.back();
  }
  long q = f.q(), count = 0, all = 1;
  for (int i = 0; i < total; ++i) all *= q;
  for (long code = 1; code < all; ++code) {
    long c = code;
    std::vector<Poly> entries;
    for (int len : lens) {
      std::vector<Elem> v(len);
      for (auto& x : v) {
        x = static_cast<Elem>(c % q);
        c /= q;
      }
      entries.emplace_back(f, v);
    }
    bool top = false;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (!entries[j].is_zero() && entries[j].deg() == E.twists[j] - d) top = true;
    }
    // coprime entries: Euclid on the running gcd
    Poly g(f);
    for (std::size_t j = 0; j < entries.size(); ++j) {
      Poly x = g, y = entries[j];
      while (!y.is_zero()) {
        Poly r = poly_divmod(x, y).second;
        x = y;
        y = r;
      }
      g = x;
    }
    if (top && g.deg() == 0) ++count;
  }
  return count / (q - 1);
}

}  // namespace

TEST_CASE("subbundle_validate examples") {
  const Field& f = field_make(3, 1);
  auto E = split_bundle(f, {0, 0});
  CHECK(subbundle_validate(E, {0}, column(f, {{1}, {}})));
  CHECK_FALSE(subbundle_validate(E, {-1}, column(f, {{0, 1}, {}})));
  CHECK(subbundle_validate(E, {-1}, column(f, {{0, 1}, {1}})));
  CHECK_THROWS_AS(subbundle_validate(E, {0}, column(f, {{0, 1}, {1}})), DegreeBoundViolated);
  CHECK_THROWS_AS(subbundle_validate(E, {0, 0}, column(f, {{1}, {}})), ShapeMismatch);
  // nonvanishing at infinity matters: (1, t) with d = -2 has coprime entries
  // but no entry reaches degree 2
  CHECK_FALSE(subbundle_validate(E, {-2}, column(f, {{1}, {0, 1}})));
}

TEST_CASE("canonical_key examples") {
  const Field& f = field_make(3, 1);
  auto E = split_bundle(f, {0, 0});
  auto axis = make_subbundle(E, {0}, column(f, {{1}, {}}));
  CHECK(axis.key_twist == 1);
  // h0(O(1)) = 2 sections, both in the first factor
  CHECK(canonical_key(E, axis) == Mat(f, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  auto w = make_subbundle(E, {-1}, column(f, {{0, 1}, {1}}));
  CHECK(w.key_twist == 2);
  CHECK(w.key.rows() == 2);  // h0(O(-1+2))
  auto w2 = make_subbundle(E, {-1}, column(f, {{0, 2}, {2}}));
  CHECK(w2.key == w.key);
  CHECK(w2 == w);
  CHECK(w.mat.at(0, 0) == P(f, {0, 1}));
}

TEST_CASE("enumerate_subbundles examples") {
  const Field& f = field_make(3, 1);
  auto E = split_bundle(f, {0, 0});
  CHECK(enumerate_subbundles(E, 1, 0, 0).size() == 4);
  CHECK(enumerate_subbundles(E, 1, 1, 1).empty());
  auto full = enumerate_subbundles(E, 2, 0, 0);
  REQUIRE(full.size() == 1);
  CHECK(full[0] == whole_bundle(E));
  Budget tiny{10};
  CHECK_THROWS_AS(enumerate_subbundles(E, 1, -3, -3, tiny), BudgetExceeded);
}

TEST_CASE("enumerated line subbundles match brute force") {
  for (long p : {2, 3}) {
    const Field& f = field_make(p, 1);
    for (auto tw : std::vector<std::vector<int>>{{0, 0}, {0, -1}, {1, -1}, {1, 0, 0}, {0, 0, -1}}) {
      auto E = split_bundle(f, tw);
      for (int d = tw.front() - 2; d <= tw.front(); ++d) {
        auto subs = enumerate_subbundles(E, 1, d, d);
        CHECK(static_cast<long>(subs.size()) == brute_line_count(E, d));
        for (std::size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1] < subs[i]);
      }
    }
  }
}

TEST_CASE("degree bound: nothing above the sum of the top twists") {
  for (long p : {2, 3}) {
    const Field& f = field_make(p, 1);
    for (auto tw : std::vector<std::vector<int>>{{0, 0}, {1, 0}, {0, -1}, {1, -1}, {2, 0, -1}, {0, 0, 0}}) {
      auto E = split_bundle(f, tw);
      int n = E.rank();
      for (int r = 1; r < n; ++r) {
        int bound = 0;
        for (int j = 0; j < r; ++j) bound += tw[j];
        for (int d = bound + 1; d <= bound + 2; ++d) {
          CHECK(enumerate_subbundles(E, r, d, d - (r - 1) * tw.front()).empty());
        }
        CHECK_FALSE(enumerate_subbundles(E, r, bound, bound - (r - 1) * tw.front()).empty());
      }
    }
  }
}

TEST_CASE("rank-2 subbundles of a rank-3 bundle") {
  const Field& f = field_make(2, 1);
  auto E = split_bundle(f, {0, 0, 0});
  // constant planes in F_2^3: 7
  auto planes = enumerate_subbundles(E, 2, 0, 0);
  CHECK(planes.size() == 7);
  for (auto& W : planes) {
    CHECK(W.col_twists == std::vector<int>{0, 0});
    CHECK(subbundle_validate(E, W.col_twists, W.mat));
  }
}

TEST_CASE("saturate examples") {
  const Field& f = field_make(3, 1);
  auto E = split_bundle(f, {0, 0});
  auto s = saturate(E, {-1}, column(f, {{0, 1}, {}}));
  CHECK(s == make_subbundle(E, {0}, column(f, {{1}, {}})));
  CHECK(s.degree() == 0);
  auto w = make_subbundle(E, {-1}, column(f, {{0, 1}, {1}}));
  CHECK(saturate(E, w.col_twists, w.mat) == w);
  auto s2 = saturate(E, {-2}, column(f, {{0, 0, 1}, {0, 1}}));
  CHECK(s2 == w);
  CHECK(s2.degree() == -1);
  CHECK_THROWS_AS(saturate(E, {-1}, column(f, {{}, {}})), NotInjective);
}

TEST_CASE("saturate is idempotent and monotone") {
  const Field& f = field_make(2, 1);
  auto E = split_bundle(f, {0, 0, -1});
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> bit(0, 1);
  int checked = 0;
  for (int it = 0; it < 150; ++it) {
    // random M (n x 1) with twist -2 and M' = [M | random column] with twists (-2,-2)
    PolyMat M(f, 3, 1), M2(f, 3, 2);
    std::vector<int> d{-2}, d2{-2, -2};
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        int len = E.twists[j] + 2 + 1;
        std::vector<Elem> c(len);
        for (auto& x : c) x = bit(rng);
        M2.at(j, k) = Poly(f, c);
      }
      M.at(j, 0) = M2.at(j, 0);
    }
    if (M.is_zero()) continue;
    auto s = saturate(E, d, M);
    CHECK(saturate(E, s.col_twists, s.mat) == s);
    CHECK(s.degree() >= -2);
    bool inj = false;
    for (auto& mn : maximal_minors(M2)) inj = inj || !mn.value.is_zero();
    if (!inj) continue;
    auto s2 = saturate(E, d2, M2);
    CHECK(contains(s2, s));
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("birkhoff examples") {
  const Field& f = field_make(3, 1);
  LMat T = lmat_diag_monomials(f, {1, 0});
  auto b = birkhoff_factorize(T);
  CHECK(b.twists == std::vector<int>{1, 0});
  CHECK(b.A_plus == LMat::identity(f, 2));
  CHECK(b.A_minus == LMat::identity(f, 2));

  LMat swap(f, 2, 2);
  swap.at(0, 1) = LPoly(0, P(f, {1}));
  swap.at(1, 0) = LPoly(0, P(f, {1}));
  CHECK(birkhoff_factorize(swap).twists == std::vector<int>{0, 0});

  LMat U(f, 2, 2);
  U.at(0, 0) = LPoly(1, P(f, {1}));
  U.at(0, 1) = LPoly(0, P(f, {1}));
  U.at(1, 1) = LPoly(-1, P(f, {1}));
  // U = diag(t, 1/t) * [[1, 1/t], [0, 1]], the right factor invertible over F[1/t]
  LMat minus = LMat::identity(f, 2);
  minus.at(0, 1) = LPoly(-1, P(f, {1}));
  CHECK(lmat_diag_monomials(f, {1, -1}) * minus == U);
  auto b2 = birkhoff_factorize(U);
  CHECK(b2.twists == std::vector<int>{1, -1});
  CHECK(b2.A_plus * lmat_diag_monomials(f, b2.twists) * b2.A_minus == U);
  CHECK(b2.A_plus.is_polynomial());
  CHECK(b2.A_minus.is_inverse_polynomial());

  LMat sing(f, 2, 2);
  sing.at(0, 0) = LPoly(0, P(f, {1, 1}));
  sing.at(1, 1) = LPoly(0, P(f, {1}));
  CHECK_THROWS_AS(birkhoff_factorize(sing), NotInvertible);
}

TEST_CASE("quotient_bundle examples") {
  const Field& f = field_make(3, 1);
  auto E = split_bundle(f, {0, 0});
  auto axis = make_subbundle(E, {0}, column(f, {{1}, {}}));
  CHECK(quotient_bundle(E, axis).Q.twists == std::vector<int>{0});
  auto w = make_subbundle(E, {-1}, column(f, {{0, 1}, {1}}));
  auto qw = quotient_bundle(E, w);
  CHECK(qw.Q.twists == std::vector<int>{1});
  CHECK((qw.proj * w.mat).is_zero());
  auto E3 = split_bundle(f, {1, 0, -1});
  auto mid = make_subbundle(E3, {0}, column(f, {{}, {1}, {}}));
  CHECK(quotient_bundle(E3, mid).Q.twists == std::vector<int>{1, -1});
  CHECK_THROWS_AS(quotient_bundle(E, whole_bundle(E)), FullRank);
}

TEST_CASE("quotients: additivity, global projection, surjective fibers") {
  for (long p : {2, 3}) {
    const Field& f = field_make(p, 1);
    for (auto tw : std::vector<std::vector<int>>{{0, 0}, {1, -1}, {0, 0, -1}, {1, 0, 0}}) {
      auto E = split_bundle(f, tw);
      for (int r = 1; r < E.rank(); ++r) {
        int top = 0;
        for (int j = 0; j < r; ++j) top += tw[j];
        for (int d = top; d >= top - 2; --d) {
          for (auto& W : enumerate_subbundles(E, r, d, d - (r - 1) * tw.front())) {
            auto qd = quotient_bundle(E, W);
            CHECK(qd.Q.degree() == E.degree() - W.degree());
            CHECK(qd.Q.rank() == E.rank() - r);
            CHECK((qd.proj * W.mat).is_zero());
            for (std::size_t i = 0; i < qd.proj.rows(); ++i) {
              for (std::size_t j = 0; j < qd.proj.cols(); ++j) {
                const Poly& e = qd.proj.at(i, j);
                CHECK((e.is_zero() || e.deg() <= qd.Q.twists[i] - tw[j]));
              }
            }
            for (Elem x = 0; x < f.q(); ++x) CHECK(rank(qd.proj.eval(x)) == qd.Q.twists.size());
            CHECK(qd.birkhoff.A_plus * lmat_diag_monomials(f, qd.Q.twists) * qd.birkhoff.A_minus ==
                  qd.transition);
          }
        }
      }
    }
  }
}

TEST_CASE("extend_scalars") {
  const Field& f = field_make(3, 1);
  auto E = split_bundle(f, {0, 0});
  auto E1 = extend_scalars(E, 1);
  CHECK(E1 == E);
  auto E2 = extend_scalars(E, 2);
  CHECK(E2.field->q() == 9);
  CHECK(E2.twists == E.twists);
  auto w = make_subbundle(E, {-1}, column(f, {{0, 1}, {1}}));
  auto w2 = extend_scalars(w, 2);
  CHECK(rank(w2.key) == rank(w.key));
  CHECK(subbundle_validate(E2, w2.col_twists, w2.mat));
  CHECK(make_subbundle(E2, w2.col_twists, w2.mat) == w2);
  // every F_3 line subbundle of degree -1 stays valid over F_9 and F_27
  for (auto& W : enumerate_subbundles(E, 1, -1, -1)) {
    for (int m : {2, 3}) {
      auto Wm = extend_scalars(W, m);
      auto Em = extend_scalars(E, m);
      CHECK(subbundle_validate(Em, Wm.col_twists, Wm.mat));
      CHECK(make_subbundle(Em, Wm.col_twists, Wm.mat) == Wm);
    }
  }
}
