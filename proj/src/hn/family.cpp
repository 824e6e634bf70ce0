#include <algorithm>

#include "parahn/errors.hpp"
#include "parahn/hn.hpp"

namespace parahn {

const Field& FlagFamily::eval_field() const { return field_extend(*bundle.field, extension); }

ParabolicBundle family_member(const FlagFamily& fam, Elem u) {
  const Field& small = *fam.bundle.field;
  const Field& big = fam.eval_field();
  if (!big.contains(u)) throw ConsistencyError("parameter outside " + big.name());
  if (fam.jumps.size() != fam.points.size() || fam.generators.size() != fam.points.size()) {
    throw ConsistencyError("family needs jumps and generators for every point");
  }
  int n = fam.bundle.rank();
  std::vector<Elem> pts;
  std::vector<Flag> flags;
  for (std::size_t i = 0; i < fam.points.size(); ++i) {
    pts.push_back(embed(small, big, fam.points[i]));
    std::vector<Mat> proper;
    for (const auto& g : fam.generators[i]) proper.push_back(polymat_embed(g, big).eval(u));
    try {
      flags.push_back(make_flag(big, n, fam.jumps[i], proper));
    } catch (const ConsistencyError& e) {
      throw DegenerateFlagAt("flag at point " + std::to_string(i) + " degenerates at u = " + std::to_string(u) +
                             ": " + e.what());
    }
  }
  return make_parabolic(extend_scalars(fam.bundle, fam.extension), pts, flags, fam.weights);
}

FamilyScan family_scan(const FlagFamily& fam, const std::vector<Elem>& params, const Budget& budget) {
  const Field& big = fam.eval_field();
  std::vector<Elem> us = params;
  if (us.empty()) {
    for (Elem x = 0; x < big.q(); ++x) us.push_back(x);
  }
  std::vector<ParabolicBundle> members;
  std::vector<Elem> bad;
  for (Elem u : us) {
    try {
      members.push_back(family_member(fam, u));
    } catch (const DegenerateFlagAt&) {
      bad.push_back(u);
    }
  }
  if (!bad.empty()) {
    std::string list;
    for (Elem u : bad) list += (list.empty() ? "" : ", ") + std::to_string(u);
    throw DegenerateFlagAt("flags degenerate at u = " + list);
  }
  FamilyScan out;
  out.field = &big;
  for (std::size_t k = 0; k < us.size(); ++k) out.data.emplace_back(us[k], hn_datum(members[k], budget));

  std::vector<HNDatum> attained;
  for (const auto& [u, d] : out.data) attained.push_back(d);
  std::sort(attained.begin(), attained.end());
  attained.erase(std::unique(attained.begin(), attained.end()), attained.end());
  for (const auto& d : attained) {
    bool minimal = true;
    for (const auto& e : attained) {
      if (e != d && hn_leq(e, d)) minimal = false;
    }
    if (minimal) out.minimal.push_back(d);
  }
  for (const auto& [u, d] : out.data) {
    if (std::find(out.minimal.begin(), out.minimal.end(), d) == out.minimal.end()) out.above.push_back(u);
  }
  return out;
}

}  // namespace parahn
