// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference oracles for the tests. Everything here is written
// from the definitions, by plain enumeration, without the library's
// reductions, tables or dynamic programs.

#ifndef GREEDY_TESTS_SUPPORT_REFERENCE_H_
#define GREEDY_TESTS_SUPPORT_REFERENCE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "greedy/rational.h"

namespace greedy::reference {

using Mask = uint64_t;
using Fn = std::function<Rational(Mask)>;

inline int Popcount(Mask m) { return __builtin_popcountll(m); }

inline std::vector<Mask> SubsetsOf(Mask m) {
  std::vector<Mask> out;
  for (Mask s = m;; s = (s - 1) & m) {
    out.push_back(s);
    if (s == 0) break;
  }
  return out;
}

// F_{gamma,alpha,k}(X) as the literal max over X' subset of X, with the
// coefficient sequence `xi` (xi[i-1] = xi_i). Elements: a_i = i-1,
// b_i = k+i-1.
inline Rational CriticalByDefinition(const Rational& gamma,
                                     const Rational& alpha, int k,
                                     const std::vector<Rational>& xi, Mask x) {
  auto h = [&](const Rational& v) {
    Rational inv = 1 / gamma;
    return Rational((inv - 1) / (k - 1) * v * v + (k - inv) / (k - 1) * v);
  };
  Rational best;
  bool first = true;
  for (Mask sub : SubsetsOf(x)) {
    Rational s = 0;
    for (int i = 0; i < k; ++i) {
      if (sub >> i & 1) s += xi[i];
    }
    int in_b = 0;
    for (int i = 0; i < k; ++i) in_b += (sub >> (k + i)) & 1;
    const int b1 = (sub >> k) & 1;
    Rational v = h(Rational(b1 * in_b)) / k * (1 - alpha * s) + s;
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

inline std::vector<Rational> GeometricXi(const Rational& alpha, int k) {
  std::vector<Rational> xi;
  Rational r = 1;
  r /= k;
  for (int i = 0; i < k; ++i) {
    xi.push_back(r);
    r *= (k - alpha) / k;
  }
  return xi;
}

// max f over |S| <= k.
inline Rational BestValue(int n, const Fn& f, int k) {
  std::optional<Rational> best;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (Popcount(m) > k) continue;
    Rational v = f(m);
    if (!best || v > *best) best = v;
  }
  return *best;
}

// Plain greedy with lowest-index ties; returns the chain S_0..S_steps.
inline std::vector<Mask> LowestIndexGreedy(int n, const Fn& f, int steps,
                                           bool stop_when_flat) {
  std::vector<Mask> chain{0};
  Mask s = 0;
  for (int step = 0; step < steps; ++step) {
    int pick = -1;
    Rational best;
    for (int x = 0; x < n; ++x) {
      if (s >> x & 1) continue;
      Rational v = f(s | Mask{1} << x);
      if (pick < 0 || v > best) {
        pick = x;
        best = v;
      }
    }
    if (pick < 0) break;
    if (stop_when_flat && best <= f(s)) break;
    s |= Mask{1} << pick;
    chain.push_back(s);
  }
  return chain;
}

// Definition-level augmentability check: for every X in `xs` and every
// Y subset of U with Y not inside X, some y in the pool (Y\X or Y) reaches
// the threshold (gamma f(X u Y) - alpha f(X)) / |Y|.
inline bool AugmentableByDefinition(int n, const Fn& f, const Rational& gamma,
                                    const Rational& alpha,
                                    const std::vector<Mask>& xs,
                                    bool pool_outside_x) {
  const Mask full = (Mask{1} << n) - 1;
  for (Mask x : xs) {
    const Rational fx = f(x);
    for (Mask y : SubsetsOf(full)) {
      if ((y & ~x) == 0) continue;
      const Rational threshold =
          (gamma * f(x | y) - alpha * fx) / Popcount(y);
      const Mask pool = pool_outside_x ? (y & ~x) : y;
      bool ok = false;
      for (int e = 0; e < n && !ok; ++e) {
        if ((pool >> e & 1) && f(x | Mask{1} << e) - fx >= threshold) ok = true;
      }
      if (!ok) return false;
    }
  }
  return true;
}

inline std::vector<Mask> AllSets(int n) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) out.push_back(m);
  return out;
}

// min over X in xs and Y subset of U\X of sum of singleton gains over joint
// gain; 0/0 = 1, positive/0 skipped.
inline Rational WeakRatioByDefinition(int n, const Fn& f,
                                      const std::vector<Mask>& xs) {
  const Mask full = (Mask{1} << n) - 1;
  Rational best = 1;
  for (Mask x : xs) {
    const Rational fx = f(x);
    for (Mask y : SubsetsOf(full & ~x)) {
      Rational num = 0;
      for (int e = 0; e < n; ++e) {
        if (y >> e & 1) num += f(x | Mask{1} << e) - fx;
      }
      Rational den = f(x | y) - fx;
      if (den == 0) {
        if (num == 0 && best > 1) best = 1;
        continue;
      }
      Rational r = num / den;
      if (r < best) best = r;
    }
  }
  return best;
}

// Max weight of an independent subset of X.
inline Rational WeightedRankByDefinition(
    int n, const std::function<bool(Mask)>& independent,
    const std::vector<Rational>& w, Mask x) {
  Rational best = 0;
  for (Mask s : SubsetsOf(x)) {
    if (!independent(s)) continue;
    Rational total = 0;
    for (int e = 0; e < n; ++e) {
      if (s >> e & 1) total += w[e];
    }
    if (total > best) best = total;
  }
  return best;
}

// min over X of smallest/largest basis size, bases found as independent
// subsets of X that cannot be extended inside X.
inline Rational RankQuotientByDefinition(
    int n, const std::function<bool(Mask)>& independent) {
  Rational best = 1;
  for (Mask x = 0; x < (Mask{1} << n); ++x) {
    int lo = 1 << 20;
    int hi = -1;
    for (Mask b : SubsetsOf(x)) {
      if (!independent(b)) continue;
      bool maximal = true;
      for (int e = 0; e < n; ++e) {
        if ((x >> e & 1) && !(b >> e & 1) && independent(b | Mask{1} << e)) {
          maximal = false;
        }
      }
      if (!maximal) continue;
      lo = std::min(lo, Popcount(b));
      hi = std::max(hi, Popcount(b));
    }
    if (hi > 0) {
      Rational q(lo, hi);
      q.canonicalize();
      if (q < best) best = q;
    }
  }
  return best;
}

// Ford-Fulkerson with depth-first augmenting paths on a dense capacity
// matrix; the last vertex is an added super sink.
inline Rational DenseMaxFlow(std::vector<std::vector<Rational>> cap, int s,
                             int t) {
  const int n = static_cast<int>(cap.size());
  Rational flow = 0;
  while (true) {
    std::vector<int> parent(n, -1);
    std::vector<int> stack{s};
    parent[s] = s;
    while (!stack.empty() && parent[t] < 0) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          stack.push_back(v);
        }
      }
    }
    if (parent[t] < 0) return flow;
    Rational b = -1;
    for (int v = t; v != s; v = parent[v]) {
      if (b < 0 || cap[parent[v]][v] < b) b = cap[parent[v]][v];
    }
    for (int v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= b;
      cap[v][parent[v]] += b;
    }
    flow += b;
  }
}

}  // namespace greedy::reference

#endif  // GREEDY_TESTS_SUPPORT_REFERENCE_H_
