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

#ifndef GREEDY_INDEPENDENCE_H_
#define GREEDY_INDEPENDENCE_H_

#include <functional>
#include <vector>

#include "greedy/rational.h"
#include "greedy/set_function.h"
#include "greedy/subset.h"

namespace greedy {

// Default guard for exhaustive work over 2^U of an independence system.
inline constexpr int kIndependenceGuard = 16;

// A ground set, a subset-closed independence predicate and nonnegative
// element weights.
struct IndependenceSystem {
  GroundSet ground;
  std::function<bool(Subset)> independent;
  std::vector<Rational> weights;

  int n() const { return ground.size(); }
  Rational Weight(Subset s) const;

  // Downward closure of `generators`.
  static IndependenceSystem FromGenerators(GroundSet ground,
                                           std::vector<Subset> generators,
                                           std::vector<Rational> weights);
  // Every subset independent.
  static IndependenceSystem Free(GroundSet ground,
                                 std::vector<Rational> weights);
  // Subsets of size at most `rank`.
  static IndependenceSystem Uniform(GroundSet ground, int rank,
                                    std::vector<Rational> weights);
};

// Independence of every subset, indexed by mask. Throws SizeLimitExceeded
// when n > max_n.
std::vector<bool> IndependenceTable(const IndependenceSystem& sys,
                                    int max_n = kIndependenceGuard);

// Throws MalformedSystem unless the empty set is independent, every subset
// of an independent set is independent, and all weights are nonnegative.
void ValidateSystem(const IndependenceSystem& sys,
                    int max_n = kIndependenceGuard);

// f(X) = max weight of an independent subset of X, tabulated over all X.
// Validates the system first.
SetFunction WeightedRankOracle(const IndependenceSystem& sys,
                               int max_n = kIndependenceGuard);

}  // namespace greedy

#endif  // GREEDY_INDEPENDENCE_H_
