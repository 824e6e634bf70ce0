#include "parahn/theta.hpp"

#include "parahn/errors.hpp"

namespace parahn {

void validate_theta(const ParabolicBundle& V, const ThetaFiltration& F) {
  for (std::size_t i = 0; i < F.steps.size(); ++i) {
    const auto& st = F.steps[i];
    if (st.sub.ambient != V.bundle.twists || &st.sub.field() != V.bundle.field) {
      throw InvalidFiltration("step " + std::to_string(i) + " is not a subbundle of V");
    }
    if (i == 0) continue;
    const auto& pr = F.steps[i - 1];
    if (st.weight <= pr.weight) throw InvalidFiltration("theta weights must increase strictly");
    if (!contains(pr.sub, st.sub)) {
      throw InvalidFiltration("step " + std::to_string(i) + " is not contained in step " + std::to_string(i - 1));
    }
  }
}

std::vector<std::pair<const Subbundle*, long>> theta_terms(const ThetaFiltration& F) {
  std::vector<std::pair<const Subbundle*, long>> out;
  for (std::size_t i = 0; i < F.steps.size(); ++i) {
    long mult = i + 1 < F.steps.size() ? F.steps[i + 1].weight - F.steps[i].weight : 1;
    out.emplace_back(&F.steps[i].sub, mult);
  }
  return out;
}

Rat wt_combined(const ParabolicBundle& V, const ThetaFiltration& F) {
  validate_theta(V, F);
  Rat n(V.rank()), dv = parabolic_degree(V), s(0);
  for (auto [W, mult] : theta_terms(F)) {
    s += Rat(mult) * (parabolic_degree(V, *W) * n - dv * Rat(W->rank()));
  }
  return Rat(2) * s;
}

long wt_chi(const ParabolicBundle& V, const ThetaFiltration& F, std::size_t point, std::size_t i, std::size_t j) {
  validate_theta(V, F);
  if (point >= V.num_points()) throw BadIndex("point index " + std::to_string(point) + " out of range");
  std::size_t N = V.flags[point].length();
  if (i < 1 || j < 1 || i > N || j > N || i == j) {
    throw BadIndex("block pair (" + std::to_string(i) + "," + std::to_string(j) + ") invalid for " +
                   std::to_string(N) + " blocks");
  }
  const auto& a = V.flags[point].jumps;
  long s = 0;
  for (auto [W, mult] : theta_terms(F)) {
    auto ah = induced_quot_datum(V, *W).jumps[point];
    s += mult * (ah[i - 1] * a[j - 1] - ah[j - 1] * a[i - 1]);
  }
  return s;
}

Rat wt_det(const ParabolicBundle& V, const ThetaFiltration& F) {
  if (V.num_points() != 1) {
    throw MultiplePoints("determinant weight needs exactly one marked point, got " + std::to_string(V.num_points()));
  }
  validate_theta(V, F);
  long n = V.rank();
  long degx = V.bundle.degree() + n;
  long s = 0;
  for (auto [W, mult] : theta_terms(F)) {
    long r = W->rank();
    s += mult * ((W->degree() + r) * n - degx * r);
  }
  return Rat(2 * s);
}

Rat chi_pairing(int n, const std::vector<int>& jumps, const std::vector<Rat>& weights, std::size_t l, std::size_t k) {
  std::size_t N = jumps.size();
  if (weights.size() != N) throw BadIndex("weights and jumps differ in length");
  if (l < 1 || k < 1 || l > N || k > N || l == k) {
    throw BadIndex("block pair (" + std::to_string(l) + "," + std::to_string(k) + ") invalid for " +
                   std::to_string(N) + " blocks");
  }
  auto below = [&](std::size_t idx) {
    long s = 0;
    for (std::size_t m = 1; m < idx; ++m) s += jumps[m - 1];
    return Rat(s);
  };
  Rat two(2), nn(n);
  return two * nn * weights[l - 1] - two * below(l) - Rat(jumps[l - 1]) - two * nn * weights[k - 1] +
         two * below(k) + Rat(jumps[k - 1]);
}

bool WeightRegion::satisfied_by(const std::vector<Rat>& weights) const {
  for (const auto& c : constraints) {
    Rat lhs(0);
    for (std::size_t m = 0; m < c.coeffs.size(); ++m) lhs += c.coeffs[m] * weights[m];
    if (c.relation == "<=" ? lhs > c.rhs : lhs < c.rhs) return false;
  }
  return true;
}

Admissibility is_admissible(int n, const std::vector<int>& jumps, const std::vector<Rat>& weights) {
  std::size_t N = jumps.size();
  if (weights.size() != N) throw BadWeights("expected " + std::to_string(N) + " weights");
  for (std::size_t m = 0; m < N; ++m) {
    if (weights[m] <= Rat(0) || weights[m] >= Rat(1)) throw BadWeights("weights must lie in (0,1)");
    if (m > 0 && !(weights[m - 1] < weights[m])) throw BadWeights("weights must increase strictly");
  }
  WeightRegion reg;
  Rat half = Rat(1, 2 * n), inv = Rat(1, n);
  for (std::size_t k = 1; k <= N; ++k) {
    for (std::size_t l = k + 1; l <= N; ++l) {
      long between = 0;
      for (std::size_t m = k; m < l; ++m) between += jumps[m - 1];
      Rat mid = inv * Rat(between) + Rat(jumps[l - 1] - jumps[k - 1], 2 * n);
      std::vector<Rat> c(N, Rat(0));
      c[l - 1] = Rat(1);
      c[k - 1] = Rat(-1);
      reg.constraints.push_back({c, ">=", mid - half});
      reg.constraints.push_back({c, "<=", mid + half});
    }
  }
  return {reg.satisfied_by(weights), reg};
}

}  // namespace parahn
