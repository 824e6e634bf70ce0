#pragma once

#include <string>
#include <vector>

#include "parahn/parabolic.hpp"

namespace parahn {

struct ThetaStep {
  int weight;
  Subbundle sub;
};

// Decreasing Z-filtration: W_h = V for h < m_1, W_h = W_i for m_i <= h < m_{i+1},
// W_h = W_last at h = m_last and 0 above it. Repeated subbundles are allowed.
struct ThetaFiltration {
  std::vector<ThetaStep> steps;
};

// Throws InvalidFiltration unless weights strictly increase and the
// subbundles are nested inside V, each containing the next.
void validate_theta(const ParabolicBundle& V, const ThetaFiltration& F);

// (W_h, multiplicity) for the nonconstant part of the filtration.
std::vector<std::pair<const Subbundle*, long>> theta_terms(const ThetaFiltration& F);

Rat wt_combined(const ParabolicBundle& V, const ThetaFiltration& F);

// i, j are 1-based flag block indices. Throws BadIndex.
long wt_chi(const ParabolicBundle& V, const ThetaFiltration& F, std::size_t point, std::size_t i, std::size_t j);

// Single marked point only. Throws MultiplePoints.
Rat wt_det(const ParabolicBundle& V, const ThetaFiltration& F);

// 1-based block indices l != k. Throws BadIndex.
Rat chi_pairing(int n, const std::vector<int>& jumps, const std::vector<Rat>& weights, std::size_t l, std::size_t k);

struct Constraint {
  std::vector<Rat> coeffs;  // on (lambda^(1), ..., lambda^(N))
  std::string relation;     // "<=" or ">="
  Rat rhs;
};

struct WeightRegion {
  std::vector<Constraint> constraints;
  bool satisfied_by(const std::vector<Rat>& weights) const;
};

struct Admissibility {
  bool admissible;
  WeightRegion region;
};

// Throws BadWeights unless the weights strictly increase inside (0,1) and
// match the jumps.
Admissibility is_admissible(int n, const std::vector<int>& jumps, const std::vector<Rat>& weights);

}  // namespace parahn
