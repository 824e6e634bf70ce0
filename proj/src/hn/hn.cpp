#include "parahn/hn.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "parahn/errors.hpp"

namespace parahn {

namespace {

int top_degree(const SplitBundle& E, int r) {
  int s = 0;
  for (int j = 0; j < r; ++j) s += E.twists[j];
  return s;
}

// Per unit of rank, the largest parabolic correction a subbundle can carry.
Rat slack(const ParabolicBundle& V) {
  Rat s(0);
  for (const auto& w : V.weights) s += Rat(1) - w.front();
  return s;
}

struct Window {
  int rank;
  int lo;
  int hi;
};

// Subbundles inside the windows that contain `below` and lie in `above`
// (when given). The whole search is charged against the budget up front.
std::vector<Subbundle> search(const ParabolicBundle& V, const std::vector<Window>& windows, const Subbundle& below,
                              const Subbundle* above, const Budget& budget) {
  const SplitBundle& E = V.bundle;
  int a1 = E.twists.front();
  std::uint64_t total = 0;
  for (const auto& w : windows) {
    if (w.rank >= E.rank()) continue;
    for (int d = w.lo; d <= w.hi; ++d) {
      total += count_candidates(E, w.rank, d, d - (w.rank - 1) * a1);
      if (total > budget.cap) throw BudgetExceeded(total, budget.cap);
    }
  }
  std::vector<Subbundle> out;
  for (const auto& w : windows) {
    for (int d = w.lo; d <= w.hi; ++d) {
      for (auto& W : enumerate_subbundles(E, w.rank, d, d - (w.rank - 1) * a1, budget)) {
        if (!contains(W, below)) continue;
        if (above != nullptr && !contains(*above, W)) continue;
        out.push_back(std::move(W));
      }
    }
  }
  return out;
}

void check_length(const HNDatum& P, const HNDatum& Q) {
  if (P.size() != Q.size()) {
    throw LengthMismatch("data of lengths " + std::to_string(P.size()) + " and " + std::to_string(Q.size()));
  }
}

}  // namespace

int degree_floor(const ParabolicBundle& V, const Subbundle& U, int r, const Rat& threshold) {
  Rat bound = parabolic_degree(V, U) + Rat(r - U.rank()) * threshold - Rat(r) * slack(V);
  return static_cast<int>(bound.ceil());
}

Subbundle max_destabilizing(const ParabolicBundle& V, const Subbundle& U, const Budget& budget) {
  int n = V.rank();
  if (U.rank() >= n) throw FullRank("nothing strictly above a full-rank subbundle");
  Subbundle whole = whole_bundle(V.bundle);
  Rat s0 = relative_slope(V, U, whole);

  std::vector<Window> windows;
  for (int r = U.rank() + 1; r < n; ++r) {
    windows.push_back({r, degree_floor(V, U, r, s0), top_degree(V.bundle, r)});
  }
  auto cands = search(V, windows, U, nullptr, budget);
  cands.push_back(whole);

  std::vector<Rat> slopes;
  Rat best = s0;
  for (const auto& W : cands) {
    slopes.push_back(relative_slope(V, U, W));
    best = std::max(best, slopes.back());
  }
  int top_rank = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (slopes[i] == best) top_rank = std::max(top_rank, cands[i].rank());
  }
  const Subbundle* top = nullptr;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (slopes[i] != best || cands[i].rank() != top_rank) continue;
    if (top != nullptr) throw NonUniqueMaximum("two maximal-slope subbundles of rank " + std::to_string(top_rank));
    top = &cands[i];
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (slopes[i] == best && !contains(*top, cands[i])) {
      throw NonUniqueMaximum("maximal-slope subbundle does not contain another maximizer");
    }
  }
  return *top;
}

HNFiltration hn_filtration(const ParabolicBundle& V, const Budget& budget) {
  HNFiltration F;
  Subbundle U = zero_subbundle(V.bundle);
  while (U.rank() < V.rank()) {
    Subbundle W = max_destabilizing(V, U, budget);
    Rat s = relative_slope(V, U, W);
    F.steps.push_back({W, induced_quot_datum(V, W), s});
    U = std::move(W);
  }
  return F;
}

HNDatum hn_datum(const HNFiltration& F) {
  HNDatum out;
  int prev = 0;
  for (const auto& st : F.steps) {
    for (int k = prev; k < st.sub.rank(); ++k) out.push_back(st.slope);
    prev = st.sub.rank();
  }
  return out;
}

HNDatum hn_datum(const ParabolicBundle& V, const Budget& budget) { return hn_datum(hn_filtration(V, budget)); }

bool hn_leq(const HNDatum& P, const HNDatum& Q) {
  check_length(P, Q);
  Rat sp(0), sq(0);
  for (std::size_t k = 0; k < P.size(); ++k) {
    sp += P[k];
    sq += Q[k];
    if (k + 1 < P.size() && sp > sq) return false;
  }
  return sp == sq;
}

bool is_semistable(const ParabolicBundle& V, const Budget& budget) {
  return hn_filtration(V, budget).length() == 1;
}

bool strata_member(const ParabolicBundle& V, const HNDatum& P, const Budget& budget) {
  if (P.size() != static_cast<std::size_t>(V.rank())) {
    throw LengthMismatch("datum of length " + std::to_string(P.size()) + " for rank " + std::to_string(V.rank()));
  }
  return hn_leq(hn_datum(V, budget), P);
}

std::optional<Subbundle> find_P_destabilizing(const ParabolicBundle& V, const HNDatum& P, const Budget& budget) {
  std::size_t n = V.rank();
  if (P.size() != n) {
    throw LengthMismatch("datum of length " + std::to_string(P.size()) + " for rank " + std::to_string(n));
  }
  Rat total(0);
  for (const auto& x : P) total += x;
  Rat deg = parabolic_degree(V);
  if (total != deg) {
    throw NoComparableStratum("datum sums to " + total.str() + ", parabolic degree is " + deg.str());
  }
  auto F = hn_filtration(V, budget);
  HNDatum H = hn_datum(F);
  if (hn_leq(H, P)) return std::nullopt;

  // largest index m0 maximizing the prefix excess of H over P
  Rat sh(0), sp(0), best(0);
  std::size_t m0 = 0;
  for (std::size_t m = 1; m <= n; ++m) {
    sh += H[m - 1];
    sp += P[m - 1];
    if (sh - sp >= best && sh - sp > Rat(0)) {
      best = sh - sp;
      m0 = m;
    }
  }
  const Subbundle* pick = nullptr;
  for (const auto& st : F.steps) {
    if (static_cast<std::size_t>(st.sub.rank()) <= m0) pick = &st.sub;
  }
  if (pick == nullptr) throw NonUniqueMaximum("no HN step below the violating prefix");
  return *pick;
}

bool certify_hn(const ParabolicBundle& V, const HNFiltration& F, const Budget& budget) {
  if (F.steps.empty() || F.steps.back().sub.rank() != V.rank()) return false;
  Subbundle prev = zero_subbundle(V.bundle);
  std::optional<Rat> last;
  for (const auto& st : F.steps) {
    if (st.sub.rank() <= prev.rank() || !contains(st.sub, prev)) return false;
    Rat s = relative_slope(V, prev, st.sub);
    if (s != st.slope || st.datum != induced_quot_datum(V, st.sub)) return false;
    if (last && !(s < *last)) return false;
    std::vector<Window> windows;
    for (int r = prev.rank() + 1; r < st.sub.rank(); ++r) {
      windows.push_back({r, degree_floor(V, prev, r, s), top_degree(V.bundle, r)});
    }
    for (const auto& W : search(V, windows, prev, &st.sub, budget)) {
      if (relative_slope(V, prev, W) > s) return false;
    }
    last = s;
    prev = st.sub;
  }
  return true;
}

std::vector<Subbundle> complete_flag(const ParabolicBundle& V, const Budget& budget) {
  int n = V.rank();
  const SplitBundle& E = V.bundle;
  std::vector<Subbundle> chain;
  Subbundle U = zero_subbundle(E);
  for (int j = 1; j < n; ++j) {
    int lo = U.degree() + static_cast<int>(Rat(E.degree() - U.degree(), n - j + 1).ceil());
    bool found = false;
    for (int d = top_degree(E, j); d >= lo && !found; --d) {
      for (auto& W : enumerate_subbundles(E, j, d, d - (j - 1) * E.twists.front(), budget)) {
        if (contains(W, U)) {
          U = std::move(W);
          found = true;
          break;
        }
      }
    }
    if (!found) throw ConsistencyError("no extension of rank " + std::to_string(j) + " found");
    chain.push_back(U);
  }
  chain.push_back(whole_bundle(E));
  return chain;
}

std::vector<Subbundle> quot_points(const ParabolicBundle& V, const QuotDatum& theta, const Budget& budget) {
  int n = V.rank();
  if (theta.rank < 0 || theta.rank > n) {
    throw ShapeMismatch("quot datum rank " + std::to_string(theta.rank) + " outside [0, " + std::to_string(n) + "]");
  }
  if (theta.rank == 0) {
    Subbundle Z = zero_subbundle(V.bundle);
    if (induced_quot_datum(V, Z) == theta) return {Z};
    return {};
  }
  std::vector<Subbundle> out;
  int d = theta.degree;
  for (auto& W : enumerate_subbundles(V.bundle, theta.rank, d, d - (theta.rank - 1) * V.bundle.twists.front(), budget)) {
    if (induced_quot_datum(V, W) == theta) out.push_back(std::move(W));
  }
  return out;
}

FiltrationDatum filtration_datum(const ParabolicBundle& V, const std::vector<Subbundle>& chain) {
  FiltrationDatum out;
  for (const auto& W : chain) {
    if (W.rank() < V.rank()) out.push_back(induced_quot_datum(V, W));
  }
  return out;
}

FiltrationDatum filtration_datum(const ParabolicBundle& V, const HNFiltration& F) {
  std::vector<Subbundle> chain;
  for (const auto& st : F.steps) chain.push_back(st.sub);
  return filtration_datum(V, chain);
}

std::vector<std::vector<Subbundle>> fil_points(const ParabolicBundle& V, const FiltrationDatum& alpha,
                                               const Budget& budget) {
  int prev = 0;
  for (const auto& th : alpha) {
    if (th.rank <= prev || th.rank >= V.rank()) {
      throw InvalidFiltration("filtration ranks must increase strictly inside (0, " + std::to_string(V.rank()) + ")");
    }
    prev = th.rank;
  }
  std::vector<std::vector<Subbundle>> levels;
  for (const auto& th : alpha) levels.push_back(quot_points(V, th, budget));

  std::vector<std::vector<Subbundle>> out;
  std::vector<Subbundle> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == levels.size()) {
      out.push_back(cur);
      return;
    }
    for (const auto& W : levels[i]) {
      if (!cur.empty() && !contains(W, cur.back())) continue;
      cur.push_back(W);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace parahn
