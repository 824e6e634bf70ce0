#pragma once

#include <cstdint>
#include <vector>

#include "parahn/laurent.hpp"
#include "parahn/linalg.hpp"
#include "parahn/polymat.hpp"

namespace parahn {

// Enumeration cap shared by every exhaustive search.
struct Budget {
  std::uint64_t cap = 100000000ULL;
};

// E = O(a_1) + ... + O(a_n) on P^1, a_1 >= ... >= a_n.
struct SplitBundle {
  const Field* field = nullptr;
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  int degree() const;
  friend bool operator==(const SplitBundle& a, const SplitBundle& b) {
    return a.field == b.field && a.twists == b.twists;
  }
};

// Throws InvalidBundle unless nonincreasing with n >= 1.
SplitBundle split_bundle(const Field& f, std::vector<int> twists);

// Subsheaf F = O(d_1) + ... + O(d_r) -> E given by an n x r matrix with
// deg mat[j][k] <= a_j - d_k. Always stored in canonical form, so two
// Subbundle values are equal iff they are the same subsheaf. Rank 0 is the
// zero subbundle.
struct Subbundle {
  std::vector<int> ambient;
  std::vector<int> col_twists;
  PolyMat mat;
  int key_twist = 0;
  Mat key;

  int rank() const { return static_cast<int>(col_twists.size()); }
  int degree() const;
  bool is_zero() const { return col_twists.empty(); }
  const Field& field() const { return mat.field(); }

  friend bool operator==(const Subbundle& a, const Subbundle& b) {
    return a.ambient == b.ambient && a.col_twists == b.col_twists && a.key == b.key;
  }
};
// Canonical order: (rank, key).
bool operator<(const Subbundle& a, const Subbundle& b);

// Throws ShapeMismatch / DegreeBoundViolated when the matrix does not fit
// the twists; otherwise reports whether the cokernel is torsion free.
bool subbundle_validate(const SplitBundle& E, const std::vector<int>& d, const PolyMat& M);

// Validates and canonicalizes. Throws InvalidSubbundle.
Subbundle make_subbundle(const SplitBundle& E, const std::vector<int>& d, const PolyMat& M);
Subbundle zero_subbundle(const SplitBundle& E);
Subbundle whole_bundle(const SplitBundle& E);

// Twist N used for the key: H^0(F(N)) inside H^0(E(N)).
int key_twist(const std::vector<int>& ambient, const std::vector<int>& d);

// Rows span H^0(F(N)) in the monomial coordinates of H^0(E(N)).
Mat section_space(const std::vector<int>& ambient, const std::vector<int>& d, const PolyMat& M, int N);

const Mat& canonical_key(const SplitBundle& E, const Subbundle& W);

// U contained in W as subsheaves of E.
bool contains(const Subbundle& W, const Subbundle& U);

// Rank r subbundles of degree d with column twists in [min_col_twist, a_1],
// sorted canonically. Throws BudgetExceeded.
std::vector<Subbundle> enumerate_subbundles(const SplitBundle& E, int r, int d, int min_col_twist,
                                            const Budget& budget = {});

// Number of candidate matrices enumerate_subbundles would visit (saturating).
std::uint64_t count_candidates(const SplitBundle& E, int r, int d, int min_col_twist);

// Saturation of the generic column span of M. Throws NotInjective.
Subbundle saturate(const SplitBundle& E, const std::vector<int>& d, const PolyMat& M);

// Fiber of W at a finite point x: an r x n matrix whose rows span W|x.
Mat fiber(const Subbundle& W, Elem x);

struct Quotient {
  SplitBundle Q;
  // Global surjection E -> Q in t-chart coordinates; deg proj[i][j] <= c_i - a_j.
  PolyMat proj;
  LMat transition;
  Birkhoff birkhoff;
};

// Throws FullRank when rank W = n.
Quotient quotient_bundle(const SplitBundle& E, const Subbundle& W);

SplitBundle extend_scalars(const SplitBundle& E, int m);
Subbundle extend_scalars(const Subbundle& W, int m);

}  // namespace parahn
