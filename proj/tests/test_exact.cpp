#include <doctest.h>

#include <random>

#include "parahn/errors.hpp"
#include "parahn/field.hpp"
#include "parahn/linalg.hpp"
#include "parahn/poly.hpp"
#include "parahn/polymat.hpp"
#include "parahn/rational.hpp"

using namespace parahn;

namespace {

// Brute force: a monic polynomial of degree k over F_p is irreducible iff no
// monic polynomial of degree 1..k/2 divides it. Polynomials as digit vectors.
bool brute_irreducible(const std::vector<long>& f, long p) {
  int k = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      std::vector<long> g(d + 1, 0);
      long c = code;
      for (int i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      std::vector<long> r = f;
      for (int i = k; i >= d; --i) {
        long q = r[i] % p;
        for (int j = 0; j <= d; ++j) r[i - d + j] = ((r[i - d + j] - q * g[j]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

Poly P(const Field& f, std::vector<long> c) {
  std::vector<Elem> e;
  for (long x : c) e.push_back(f.from_int(x));
  return Poly(f, e);
}

}  // namespace

TEST_CASE("rational canonical form and serialization") {
  CHECK(Rat(2, 4).str() == "1/2");
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat(2).str() == "2/1");
  CHECK(Rat::parse("6/8") == Rat(3, 4));
  CHECK(Rat::parse("-5") == Rat(-5));
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("x"), ParseError);
  CHECK(Rat(-3, 2).floor() == -2);
  CHECK(Rat(-3, 2).ceil() == -1);
  CHECK(Rat(1, 4) < Rat(1, 3));
}

TEST_CASE("field_make") {
  const Field& f3 = field_make(3, 1);
  CHECK(f3.q() == 3);
  CHECK(f3.modulus().empty());
  const Field& f4 = field_make(2, 2);
  CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(&field_make(2, 2) == &f4);
  CHECK_THROWS_AS(field_make(4, 1), NotPrime);
  CHECK_THROWS_AS(field_make(3, 0), InvalidDegree);
}

TEST_CASE("modulus is the smallest irreducible in c0-first order") {
  for (auto [p, k] : std::vector<std::pair<long, long>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const Field& f = field_make(p, k);
    std::vector<long> m(f.modulus().begin(), f.modulus().end());
    CHECK(brute_irreducible(m, p));
    // every candidate preceding it in c0-first order is reducible
    long total = 1;
    for (long i = 0; i < k; ++i) total *= p;
    for (long code = 0; code < total; ++code) {
      std::vector<long> g(k + 1, 0);
      long c = code;
      for (long i = k - 1; i >= 0; --i) {
        g[i] = c % p;
        c /= p;
      }
      g[k] = 1;
      if (g == m) break;
      CHECK_FALSE(brute_irreducible(g, p));
    }
  }
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (auto [p, k] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {5, 1}, {2, 3}, {3, 2}, {3, 3}, {2, 11}}) {
    const Field& f = field_make(p, k);
    std::uniform_int_distribution<Elem> d(0, f.q() - 1);
    for (int it = 0; it < 300; ++it) {
      Elem a = d(rng), b = d(rng), c = d(rng);
      CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
      CHECK(f.sub(f.add(a, b), b) == a);
    }
  }
}

TEST_CASE("embedding is a ring homomorphism") {
  for (auto [p, k, m] : std::vector<std::tuple<long, long, long>>{{3, 1, 2}, {2, 2, 2}, {3, 2, 2}, {2, 2, 3}}) {
    const Field& s = field_make(p, k);
    const Field& b = field_extend(s, m);
    for (Elem x = 0; x < s.q(); ++x) {
      for (Elem y = 0; y < s.q(); ++y) {
        CHECK(embed(s, b, s.add(x, y)) == b.add(embed(s, b, x), embed(s, b, y)));
        CHECK(embed(s, b, s.mul(x, y)) == b.mul(embed(s, b, x), embed(s, b, y)));
      }
    }
  }
}

TEST_CASE("poly_gcd examples") {
  const Field& f = field_make(3, 1);
  CHECK(poly_gcd(P(f, {0, -1, 1}), P(f, {0, 1})) == P(f, {0, 1}));
  CHECK(poly_gcd(P(f, {0, 1}), P(f, {1})) == P(f, {1}));
  CHECK(poly_gcd(Poly(f), Poly(f)).is_zero());
  CHECK_THROWS_AS(poly_gcd(P(f, {1}), P(field_make(5, 1), {1})), FieldMismatch);
}

TEST_CASE("gcd divides, is monic, and has a Bezout witness") {
  std::mt19937 rng(11);
  for (auto [p, k] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const Field& f = field_make(p, k);
    std::uniform_int_distribution<Elem> d(0, f.q() - 1);
    std::uniform_int_distribution<int> len(0, 6);
    for (int it = 0; it < 200; ++it) {
      auto rnd = [&] {
        std::vector<Elem> c(len(rng));
        for (auto& x : c) x = d(rng);
        return Poly(f, c);
      };
      Poly common = rnd();
      Poly a = rnd() * common, b = rnd() * common;
      Poly g = poly_gcd(a, b);
      if (a.is_zero() && b.is_zero()) {
        CHECK(g.is_zero());
        continue;
      }
      CHECK(g.lead() == 1);
      CHECK(poly_divmod(a, g).second.is_zero());
      CHECK(poly_divmod(b, g).second.is_zero());
      if (!common.is_zero()) CHECK(poly_divmod(g, common.monic()).second.is_zero());
      auto bz = poly_xgcd(a, b);
      CHECK(bz.g == g);
      CHECK(bz.s * a + bz.t * b == g);
    }
  }
}

TEST_CASE("rref examples") {
  const Field& f3 = field_make(3, 1);
  Mat id = Mat::identity(f3, 2);
  auto r = rref(id);
  CHECK(r.R == id);
  CHECK(r.rank == 2);
  const Field& f5 = field_make(5, 1);
  auto r2 = rref(Mat(f5, {{1, 2}, {2, 4}}));
  CHECK(r2.R == Mat(f5, {{1, 2}, {0, 0}}));
  CHECK(r2.rank == 1);
  CHECK(r2.pivots == std::vector<std::size_t>{0});
  Mat empty(f3, 0, 4);
  auto r3 = rref(empty);
  CHECK(r3.rank == 0);
  CHECK(r3.R == empty);
}

TEST_CASE("rref idempotent and row space preserving") {
  std::mt19937 rng(3);
  for (auto [p, k] : std::vector<std::pair<long, long>>{{2, 1}, {3, 1}, {2, 2}, {7, 1}}) {
    const Field& f = field_make(p, k);
    std::uniform_int_distribution<Elem> d(0, f.q() - 1);
    std::uniform_int_distribution<int> dim(0, 5);
    for (int it = 0; it < 200; ++it) {
      Mat m(f, dim(rng), dim(rng));
      for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = d(rng) % (it % 3 == 0 ? 2 : f.q());
      }
      auto r = rref(m);
      CHECK(rref(r.R).R == r.R);
      CHECK(row_space_contains(m, r.R));
      CHECK(row_space_contains(r.R, m));
      Mat ns = nullspace(m);
      CHECK(ns.rows() + r.rank == m.cols());
      if (ns.rows() > 0 && m.rows() > 0) {
        Mat prod = m * ns.transpose();
        for (std::size_t i = 0; i < prod.rows(); ++i) {
          for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod.at(i, j) == 0);
        }
      }
    }
  }
}

TEST_CASE("smith_form examples") {
  const Field& f = field_make(3, 1);
  Poly one = P(f, {1}), t = P(f, {0, 1}), zero(f);
  PolyMat a(f, 2, 2);
  a.at(0, 0) = one;
  a.at(1, 1) = t;
  auto s = smith_form(a);
  CHECK(s.D.at(0, 0) == one);
  CHECK(s.D.at(1, 1) == t);
  PolyMat b(f, 2, 2);
  b.at(0, 0) = t;
  b.at(0, 1) = one;
  b.at(1, 1) = t;
  auto s2 = smith_form(b);
  CHECK(s2.D.at(0, 0) == one);
  CHECK(s2.D.at(1, 1) == P(f, {0, 0, 1}));
  CHECK(s2.U * s2.D * s2.V == b);
  PolyMat z(f, 1, 1);
  CHECK(smith_form(z).D.at(0, 0).is_zero());
}

TEST_CASE("determinant by cofactors") {
  const Field& f = field_make(5, 1);
  PolyMat m(f, 3, 3);
  long vals[3][3] = {{2, 0, 1}, {1, 3, 2}, {1, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = P(f, {vals[i][j]});
  // 2(3-2) - 0 + 1(1-3) = 0
  CHECK(det(m).is_zero());
  m.at(2, 2) = P(f, {0, 1});
  // 2(3t-2) + (1-3) = 6t - 6 = t - 1 mod 5
  CHECK(det(m) == P(f, {-6, 6}));
}
