#pragma once

#include <optional>
#include <vector>

#include "parahn/parabolic.hpp"

namespace parahn {

// Nonincreasing slopes with multiplicity.
using HNDatum = std::vector<Rat>;
// Data of the proper steps of a filtration, ranks strictly increasing.
using FiltrationDatum = std::vector<QuotDatum>;

struct HNStep {
  Subbundle sub;
  QuotDatum datum;
  Rat slope;  // slope of sub / previous step
};

// Chain 0 = U_0 c U_1 c ... c U_l = V; steps hold U_1..U_l.
struct HNFiltration {
  std::vector<HNStep> steps;
  std::size_t length() const { return steps.size(); }
};

// Smallest degree a rank-r subbundle W containing U can have while
// slope(W/U) >= threshold.
int degree_floor(const ParabolicBundle& V, const Subbundle& U, int r, const Rat& threshold);

// The subbundle W containing U, W != U, maximizing slope(W/U) and of maximal
// rank among maximizers. Throws BudgetExceeded, NonUniqueMaximum.
Subbundle max_destabilizing(const ParabolicBundle& V, const Subbundle& U, const Budget& budget = {});

HNFiltration hn_filtration(const ParabolicBundle& V, const Budget& budget = {});
HNDatum hn_datum(const HNFiltration& F);
HNDatum hn_datum(const ParabolicBundle& V, const Budget& budget = {});

// Equal sums and prefix sums of P bounded by those of Q. Throws LengthMismatch.
bool hn_leq(const HNDatum& P, const HNDatum& Q);

bool is_semistable(const ParabolicBundle& V, const Budget& budget = {});
bool strata_member(const ParabolicBundle& V, const HNDatum& P, const Budget& budget = {});

// None iff HN(V) <= P; otherwise a step of the HN filtration whose slope
// exceeds the average of the first rank-many entries of P.
// Throws NoComparableStratum, LengthMismatch.
std::optional<Subbundle> find_P_destabilizing(const ParabolicBundle& V, const HNDatum& P,
                                              const Budget& budget = {});

// Re-checks a filtration by exhaustive search: nesting, strictly decreasing
// slopes and semistable graded pieces.
bool certify_hn(const ParabolicBundle& V, const HNFiltration& F, const Budget& budget = {});

// Chain of ranks 1..n; each step a maximal-degree extension of the last.
std::vector<Subbundle> complete_flag(const ParabolicBundle& V, const Budget& budget = {});

std::vector<Subbundle> quot_points(const ParabolicBundle& V, const QuotDatum& theta, const Budget& budget = {});

FiltrationDatum filtration_datum(const ParabolicBundle& V, const std::vector<Subbundle>& chain);
FiltrationDatum filtration_datum(const ParabolicBundle& V, const HNFiltration& F);

// Nested chains (proper steps) whose step data equal alpha.
std::vector<std::vector<Subbundle>> fil_points(const ParabolicBundle& V, const FiltrationDatum& alpha,
                                               const Budget& budget = {});

// Classical HN data compatible with P: nonincreasing tuples in (1/n!)Z with
// integer sum, between the lower bound and P_1.
std::vector<HNDatum> enumerate_F(const HNDatum& P, int n, int num_points);

// Finite lattice superset of the parabolic HN data <= Q.
std::vector<HNDatum> enumerate_B(const HNDatum& Q, const std::vector<std::vector<Rat>>& weights);

// Filtration data admissible for P given the ambient jumps per point.
std::vector<FiltrationDatum> sigma_candidates(const HNDatum& P, const std::vector<std::vector<int>>& type);

// Family of flags whose basis vectors are polynomials in a parameter u.
struct FlagFamily {
  SplitBundle bundle;
  std::vector<Elem> points;
  std::vector<std::vector<Rat>> weights;
  std::vector<std::vector<int>> jumps;
  // per point, per proper member: rows x n matrix of polynomials in u
  std::vector<std::vector<PolyMat>> generators;
  int extension = 1;

  const Field& eval_field() const;
};

struct FamilyScan {
  const Field* field = nullptr;
  std::vector<std::pair<Elem, HNDatum>> data;
  std::vector<HNDatum> minimal;  // <=-minimal attained data
  std::vector<Elem> above;       // parameters whose datum is not minimal
};

ParabolicBundle family_member(const FlagFamily& fam, Elem u);

// Every parameter of the extension field when `params` is empty.
// Throws DegenerateFlagAt naming every degenerate parameter.
FamilyScan family_scan(const FlagFamily& fam, const std::vector<Elem>& params, const Budget& budget = {});

}  // namespace parahn
