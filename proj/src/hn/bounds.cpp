#include <algorithm>
#include <functional>
#include <set>

#include "parahn/errors.hpp"
#include "parahn/hn.hpp"

namespace parahn {

namespace {

long factorial(int n) {
  long f = 1;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

Rat total(const HNDatum& P) {
  Rat s(0);
  for (const auto& x : P) s += x;
  return s;
}

// Nonincreasing n-tuples from the ascending list `vals` with the given sum.
std::vector<HNDatum> tuples(const std::vector<Rat>& vals, std::size_t n, const Rat& sum) {
  std::vector<HNDatum> out;
  if (vals.empty()) return out;
  HNDatum cur;
  std::function<void(std::size_t, const Rat&)> rec = [&](std::size_t top, const Rat& rest) {
    std::size_t left = n - cur.size();
    if (left == 0) {
      if (rest == Rat(0)) out.push_back(cur);
      return;
    }
    for (std::size_t i = top + 1; i-- > 0;) {
      const Rat& v = vals[i];
      if (Rat(static_cast<long>(left)) * v < rest) break;
      if (rest - v < Rat(static_cast<long>(left - 1)) * vals.front()) continue;
      cur.push_back(v);
      rec(i, rest - v);
      cur.pop_back();
    }
  };
  rec(vals.size() - 1, sum);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<HNDatum> enumerate_F(const HNDatum& P, int n, int num_points) {
  if (P.size() != static_cast<std::size_t>(n)) {
    throw LengthMismatch("datum of length " + std::to_string(P.size()) + " for rank " + std::to_string(n));
  }
  long den = factorial(n);
  Rat hi = P.front();
  Rat lo = total(P) - Rat(static_cast<long>(n) * num_points) - Rat(n - 1) * P.front();
  long zlo = (lo * Rat(den)).ceil(), zhi = (hi * Rat(den)).floor();
  std::vector<HNDatum> out;
  std::vector<long> cur;
  std::function<void(long, long)> rec = [&](long top, long sum) {
    if (cur.size() == static_cast<std::size_t>(n)) {
      if (sum % den != 0) return;
      HNDatum d;
      for (long z : cur) d.push_back(Rat(z, den));
      out.push_back(std::move(d));
      return;
    }
    for (long z = top; z >= zlo; --z) {
      cur.push_back(z);
      rec(z, sum + z);
      cur.pop_back();
    }
  };
  rec(zhi, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HNDatum> enumerate_B(const HNDatum& Q, const std::vector<std::vector<Rat>>& weights) {
  std::size_t n = Q.size();
  if (n == 0) throw LengthMismatch("empty datum");
  long den = factorial(static_cast<int>(n));
  // fractional parts of -sum b * lambda, 0 <= b <= n!
  std::set<Rat> fracs{Rat(0)};
  auto frac = [](const Rat& x) { return x - Rat(x.floor()); };
  for (const auto& w : weights) {
    for (const auto& lam : w) {
      std::set<Rat> next;
      for (const auto& f : fracs) {
        for (long b = 0; b <= den; ++b) next.insert(frac(f - Rat(b) * lam));
      }
      fracs = std::move(next);
    }
  }
  Rat sum = total(Q);
  Rat hi = Q.front();
  Rat lo = sum - Rat(static_cast<long>(n) - 1) * Q.front();
  std::set<Rat> vals;
  for (const auto& f : fracs) {
    long zlo = (lo * Rat(den) - f).ceil(), zhi = (hi * Rat(den) - f).floor();
    for (long z = zlo; z <= zhi; ++z) vals.insert((Rat(z) + f) / Rat(den));
  }
  return tuples(std::vector<Rat>(vals.begin(), vals.end()), n, sum);
}

std::vector<FiltrationDatum> sigma_candidates(const HNDatum& P, const std::vector<std::vector<int>>& type) {
  int n = static_cast<int>(P.size());
  for (const auto& t : type) {
    int s = 0;
    for (int b : t) s += b;
    if (s != n) throw ConsistencyError("ambient jumps sum to " + std::to_string(s) + ", rank is " + std::to_string(n));
  }
  long np = static_cast<long>(type.size());
  std::vector<int> ranks;
  std::vector<Rat> prefix;
  Rat acc(0);
  for (int k = 1; k < n; ++k) {
    acc += P[k - 1];
    if (P[k - 1] > P[k]) {
      ranks.push_back(k);
      prefix.push_back(acc);
    }
  }

  // jump vectors at one point: 0 <= b <= t componentwise, above `floor`, sum k
  auto jump_choices = [](const std::vector<int>& t, const std::vector<int>& floor, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(t.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t m, int left) {
      if (m == t.size()) {
        if (left == 0) out.push_back(cur);
        return;
      }
      for (int b = floor[m]; b <= std::min(t[m], left); ++b) {
        cur[m] = b;
        rec(m + 1, left - b);
      }
    };
    rec(0, k);
    return out;
  };

  std::vector<FiltrationDatum> out;
  FiltrationDatum cur;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == ranks.size()) {
      out.push_back(cur);
      return;
    }
    int k = ranks[j];
    long dlo = (prefix[j] - Rat(k * np)).ceil(), dhi = prefix[j].floor();
    // jump vectors per point, monotone over the previous step
    std::vector<std::vector<int>> jumps(type.size());
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
      if (i == type.size()) {
        for (long d = dlo; d <= dhi; ++d) {
          cur.push_back({k, static_cast<int>(d), jumps});
          rec(j + 1);
          cur.pop_back();
        }
        return;
      }
      std::vector<int> floor = cur.empty() ? std::vector<int>(type[i].size(), 0) : cur.back().jumps[i];
      for (auto& b : jump_choices(type[i], floor, k)) {
        jumps[i] = b;
        pick(i + 1);
      }
    };
    pick(0);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace parahn
