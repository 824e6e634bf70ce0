#pragma once

#include <functional>
#include <string>
#include <vector>

#include "parahn/parabolic.hpp"

namespace fixtures {

using namespace parahn;

inline Poly poly(const Field& f, std::vector<long> c) {
  std::vector<Elem> e;
  for (long x : c) e.push_back(f.from_int(x));
  return Poly(f, e);
}

inline PolyMat column(const Field& f, std::vector<std::vector<long>> entries) {
  PolyMat m(f, entries.size(), 1);
  for (std::size_t j = 0; j < entries.size(); ++j) m.at(j, 0) = poly(f, entries[j]);
  return m;
}

inline Mat rowvec(const Field& f, std::vector<long> v) {
  std::vector<Elem> e;
  for (long x : v) e.push_back(f.from_int(x));
  return Mat(f, {e});
}

// Rank-2 full flag through the line spanned by v.
inline Flag line_flag(const Field& f, const std::vector<Elem>& v) {
  return make_flag(f, 2, {1, 1}, {Mat(f, {v})});
}

inline std::vector<Rat> quarter_weights() { return {Rat(1, 4), Rat(3, 4)}; }

inline ParabolicBundle R1(const Field& f) {
  return make_parabolic(split_bundle(f, {0, 0}), {0}, {line_flag(f, {1, 0})}, {quarter_weights()});
}

inline ParabolicBundle R2_special(const Field& f) {
  return make_parabolic(split_bundle(f, {0, 0}), {0, 1}, {line_flag(f, {1, 0}), line_flag(f, {1, 0})},
                        {quarter_weights(), quarter_weights()});
}

inline ParabolicBundle R2_generic(const Field& f) {
  return make_parabolic(split_bundle(f, {0, 0}), {0, 1}, {line_flag(f, {1, 0}), line_flag(f, {1, 1})},
                        {quarter_weights(), quarter_weights()});
}

inline ParabolicBundle R2_family(const Field& f, Elem u) {
  return make_parabolic(split_bundle(f, {0, 0}), {0, 1}, {line_flag(f, {1, 0}), line_flag(f, {1, u})},
                        {quarter_weights(), quarter_weights()});
}

inline Subbundle axis(const ParabolicBundle& V, std::size_t j) {
  const Field& f = V.field();
  PolyMat m(f, V.rank(), 1);
  m.at(j, 0) = Poly::constant(f, 1);
  return make_subbundle(V.bundle, {V.bundle.twists[j]}, m);
}

// Projective representatives of lines in F_q^2.
inline std::vector<std::vector<Elem>> lines(const Field& f) {
  std::vector<std::vector<Elem>> out{{0, 1}};
  for (Elem x = 0; x < f.q(); ++x) out.push_back({1, x});
  return out;
}

struct Instance {
  std::string name;
  ParabolicBundle V;
};

// Rank-2 bundles over F_2 and F_3 with twists in {0,-1}, one or two points,
// all full flags through lines, weights drawn from a fixed grid.
inline std::vector<Instance> rank2_suite() {
  std::vector<std::vector<Rat>> grid{
      {Rat(1, 4), Rat(3, 4)}, {Rat(1, 3), Rat(1, 2)}, {Rat(1, 5), Rat(4, 5)}, {Rat(1, 2), Rat(2, 3)}};
  std::vector<Instance> out;
  for (long p : {2, 3}) {
    const Field& f = field_make(p, 1);
    for (auto tw : std::vector<std::vector<int>>{{0, 0}, {0, -1}, {-1, -1}}) {
      auto E = split_bundle(f, tw);
      auto L = lines(f);
      // one point at 0, weights cycling through the grid
      for (std::size_t a = 0; a < L.size(); ++a) {
        for (std::size_t g = 0; g < grid.size(); ++g) {
          auto V = make_parabolic(E, {0}, {line_flag(f, L[a])}, {grid[g]});
          out.push_back({"F" + std::to_string(p) + " a=(" + std::to_string(tw[0]) + "," + std::to_string(tw[1]) +
                             ") x=0 l" + std::to_string(a) + " w" + std::to_string(g),
                         V});
        }
      }
      // two points 0 and 1, all flag pairs, two weight pairings
      for (std::size_t a = 0; a < L.size(); ++a) {
        for (std::size_t b = 0; b < L.size(); ++b) {
          for (std::size_t g : {0ul, 1ul}) {
            std::size_t h = (g + 2) % grid.size();
            auto V = make_parabolic(E, {0, 1}, {line_flag(f, L[a]), line_flag(f, L[b])}, {grid[g], grid[h]});
            out.push_back({"F" + std::to_string(p) + " a=(" + std::to_string(tw[0]) + "," + std::to_string(tw[1]) +
                               ") x=0,1 l" + std::to_string(a) + "," + std::to_string(b) + " w" + std::to_string(g),
                           V});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace fixtures
