#pragma once

#include <vector>

#include "parahn/rational.hpp"
#include "parahn/sheaves.hpp"

namespace parahn {

// Chain V^1 c ... c V^N = F^n in the fiber at a marked point; dim V^m is the
// m-th partial sum of the jumps. Zero jumps repeat a member.
struct Flag {
  std::vector<int> jumps;
  std::vector<Mat> chain;  // row bases in reduced echelon form, chain.back() = F^n

  std::size_t length() const { return jumps.size(); }
  friend bool operator==(const Flag& a, const Flag& b) { return a.jumps == b.jumps && a.chain == b.chain; }
};

// Builds a flag from its proper members (N-1 row bases). Throws
// ConsistencyError when dims, nesting or jump sums disagree.
Flag make_flag(const Field& f, int n, std::vector<int> jumps, const std::vector<Mat>& proper);

struct ParabolicBundle {
  SplitBundle bundle;  // twists empty for the zero sentinel
  std::vector<Elem> points;
  std::vector<Flag> flags;
  std::vector<std::vector<Rat>> weights;

  int rank() const { return bundle.rank(); }
  const Field& field() const { return *bundle.field; }
  std::size_t num_points() const { return points.size(); }
  friend bool operator==(const ParabolicBundle& a, const ParabolicBundle& b) {
    return a.bundle == b.bundle && a.points == b.points && a.flags == b.flags && a.weights == b.weights;
  }
};

// Validates every invariant. Throws ConsistencyError / InvalidBundle.
ParabolicBundle make_parabolic(SplitBundle E, std::vector<Elem> points, std::vector<Flag> flags,
                               std::vector<std::vector<Rat>> weights);

// Rank-0 bundle with the same points and weights as V.
ParabolicBundle zero_parabolic(const ParabolicBundle& V);

struct QuotDatum {
  int rank = 0;
  int degree = 0;
  std::vector<std::vector<int>> jumps;

  friend bool operator==(const QuotDatum& a, const QuotDatum& b) = default;
  friend auto operator<=>(const QuotDatum& a, const QuotDatum& b) = default;
};

QuotDatum induced_quot_datum(const ParabolicBundle& V, const Subbundle& W);

// Ambient jumps of V packaged as a datum.
QuotDatum ambient_datum(const ParabolicBundle& V);

Rat parabolic_degree(const ParabolicBundle& V);
Rat parabolic_degree(const ParabolicBundle& V, const Subbundle& W);
Rat parabolic_degree_of(const ParabolicBundle& V, const QuotDatum& datum);
Rat parabolic_slope(const ParabolicBundle& V);
Rat parabolic_slope(const ParabolicBundle& V, const Subbundle& W);

// Slope of W/U. Throws NotNested, EqualRanks.
Rat relative_slope(const ParabolicBundle& V, const Subbundle& U, const Subbundle& W);

// W with the induced flags (preimages of V's flags in the fiber of W).
ParabolicBundle subbundle_parabolic(const ParabolicBundle& V, const Subbundle& W);

// V/W with image flags. Throws FullRank.
ParabolicBundle quotient_parabolic(const ParabolicBundle& V, const Subbundle& W);

struct HomSpace {
  std::size_t dim = 0;
  Mat basis;  // rows: coefficient vectors in the order (row j, column k, power l)
};
// Sheaf maps A -> B carrying each flag member of A into the matching member
// of B at every point. Throws IncompatibleShape.
HomSpace hom_parabolic(const ParabolicBundle& A, const ParabolicBundle& B);

// Throws IncompatibleShape unless field, points and weights agree.
ParabolicBundle direct_sum(const ParabolicBundle& A, const ParabolicBundle& B);

ParabolicBundle extend_scalars(const ParabolicBundle& V, int m);

}  // namespace parahn
