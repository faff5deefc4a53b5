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

#ifndef GREEDY_GREEDY_H_
#define GREEDY_GREEDY_H_

#include <optional>
#include <string>
#include <vector>

#include "greedy/rational.h"
#include "greedy/set_function.h"
#include "greedy/subset.h"

namespace greedy {

// How the greedy algorithm resolves ties among maximum-gain elements.
struct TiePolicy {
  enum class Kind { kLowestIndex, kHighestIndex, kPriority };

  Kind kind = Kind::kLowestIndex;
  // For kPriority: elements listed earlier win. Unlisted elements rank after
  // all listed ones, by ascending index.
  std::vector<int> priority;

  static TiePolicy Lowest() { return {}; }
  static TiePolicy Highest() { return {Kind::kHighestIndex, {}}; }
  static TiePolicy Priority(std::vector<int> order) {
    return {Kind::kPriority, std::move(order)};
  }

  // Picks the winner among `tied` (nonempty, ascending).
  int Choose(const std::vector<int>& tied) const;

  // "lowest", "highest" or "priority:3,1,0".
  std::string ToString() const;
  // Inverse of ToString(); element names may be labels of `ground`.
  static TiePolicy Parse(const std::string& text, const GroundSet& ground);
};

enum class GreedyVariant { kAdaptive, kNonAdaptive };

struct GreedyTrace {
  std::vector<Subset> chain;      // S_0 = {}, S_1, ..., S_k
  std::vector<int> picks;         // x_1..x_k
  std::vector<Rational> gains;    // delta_1..delta_k
  std::vector<Rational> values;   // f(S_0)..f(S_k)
  std::vector<std::vector<int>> ties;  // elements tied at each step

  int steps() const { return static_cast<int>(picks.size()); }
  Subset final_set() const { return chain.back(); }
  const Rational& final_value() const { return values.back(); }
};

// Exactly k greedy steps, including steps with zero or negative gain.
// Throws InvalidCardinality if k is outside [0, n].
GreedyTrace GreedyAdaptive(const SetFunction& f, int k, const TiePolicy& tie);

// Greedy steps while some element strictly improves the value, at most k.
GreedyTrace GreedyNonAdaptive(const SetFunction& f, int k,
                              const TiePolicy& tie);

GreedyTrace RunGreedy(const SetFunction& f, int k, const TiePolicy& tie,
                      GreedyVariant variant);

// Length of the greedy chain after which no element has positive gain.
int SaturationCardinality(const SetFunction& f, const TiePolicy& tie);

struct OptimumRecord {
  int k = 0;
  Subset best_set;
  Rational best_value;
};

// Default enumeration guard for exhaustive optimum search.
inline constexpr int kOptimumGuard = 24;

// Best subset of cardinality at most k; ties go to the lexicographically
// smallest subset. Throws SizeLimitExceeded when n > max_n.
OptimumRecord BruteForceOptimum(const SetFunction& f, int k,
                                int max_n = kOptimumGuard);

// BruteForceOptimum for every k in 0..n from a single enumeration.
std::vector<OptimumRecord> OptimaByCardinality(const SetFunction& f,
                                               int max_n = kOptimumGuard);

struct RatioResult {
  ExtendedRational ratio;  // +inf when greedy gets 0 and the optimum does not
  int witness_k = 0;       // first k attaining the maximum
  std::vector<Rational> greedy_values;   // index k = 0..n
  std::vector<Rational> optimum_values;  // index k = 0..n
};

// max over k in [1, n] of f(S*_k) / f(greedy_k), with 0/0 := 1.
RatioResult ApproximationRatio(const SetFunction& f, const TiePolicy& tie,
                               GreedyVariant variant = GreedyVariant::kAdaptive,
                               int max_n = kOptimumGuard);

// CSV with header step,pick,label,gain,value,tie_count (one row per pick),
// plus gain_decimal,value_decimal when `decimals` is set.
std::string TraceToCsv(const GreedyTrace& trace, const GroundSet& ground,
                       bool decimals = false);

}  // namespace greedy

#endif  // GREEDY_GREEDY_H_
