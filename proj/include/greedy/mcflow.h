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

#ifndef GREEDY_MCFLOW_H_
#define GREEDY_MCFLOW_H_

#include <string>
#include <vector>

#include "greedy/greedy.h"
#include "greedy/rational.h"
#include "greedy/set_function.h"
#include "greedy/simplex.h"
#include "greedy/subset.h"
#include "json.hpp"

namespace greedy {

struct Arc {
  int from = 0;
  int to = 0;
};

// A directed graph with a source, an ordered sink list and one capacity map
// per commodity. The sink list is the ground set of the flow objective:
// element e is the vertex sinks[e].
struct FlowInstance {
  int vertices = 0;
  std::vector<std::string> labels;  // optional, one per vertex
  int source = 0;
  std::vector<int> sinks;
  int commodities = 1;
  std::vector<Arc> arcs;
  // capacity[i][a]: capacity of arc a for commodity i.
  std::vector<std::vector<ExtendedRational>> capacity;
  // Optional symbolic offsets: capacity[i][a] + perturbation[i][a] * eps.
  // Empty, or the same shape as `capacity`.
  std::vector<std::vector<Rational>> perturbation;

  // Throws ParseError on out-of-range indices, a source among the sinks,
  // shape mismatches or negative capacities.
  void Validate() const;

  int num_sinks() const { return static_cast<int>(sinks.size()); }
  std::string VertexLabel(int v) const;
  // Ground set over the sink list, labeled by vertex labels.
  GroundSet SinkGround() const;

  // Finite stand-in for infinite capacities: one plus the sum of all finite
  // capacities, which exceeds every finite cut.
  Rational InfinityStandIn() const;
};

// Default bound on LP variables (commodity arcs plus selected sinks).
inline constexpr int kLpGuard = 5000;

// Maximum flow of one commodity (0-based) from the source into the selected
// sinks, by shortest augmenting paths with exact arithmetic.
Rational MaxFlow(const FlowInstance& inst, int commodity, Subset sinks);

// f(X): the largest sum over t in X of d_t such that every commodity admits
// a source-to-sinks flow with excess at least d_t at each t in X. Solved as
// one exact linear program. Throws SizeLimitExceeded past `guard` variables.
Rational EvaluateObjective(const FlowInstance& inst, Subset sinks,
                           int guard = kLpGuard);

// EvaluateObjective with the instance's symbolic capacity offsets.
EpsRational EvaluatePerturbed(const FlowInstance& inst, Subset sinks,
                              int guard = kLpGuard);

// The objective over the sink list as a memoized set function.
SetFunction FlowObjective(const FlowInstance& inst, int guard = kLpGuard);

struct PerturbedTrace {
  std::vector<int> picks;
  std::vector<EpsRational> values;  // f(S_0)..f(S_k)
  std::vector<int> tie_counts;      // ties under the perturbed values
};

// Adaptive greedy on the perturbed objective.
PerturbedTrace PerturbedGreedy(const FlowInstance& inst, int k,
                               const TiePolicy& tie, int guard = kLpGuard);

// The lower-bound graph G_k for alpha commodities, with x = k/(k-1).
// Sinks are listed t_1..t_{2 alpha k}. With `perturbed`, the limiting
// capacities towards t_j carry the offset (2 alpha k - j) eps.
FlowInstance MakeLowerBoundInstance(int alpha, int k, bool perturbed = false);

// alpha x^(alpha k) / (x^(alpha k) - 1).
Rational GkRatioClosedForm(int alpha, int k);
// k (x^(alpha k) - 1): greedy value after alpha k picks.
Rational GkGreedyValue(int alpha, int k);
// alpha k x^(alpha k): optimum at cardinality alpha k.
Rational GkOptimumValue(int alpha, int k);

// Six vertices s, v1, v2, t1, t2, t3 and alpha >= 2 commodities; commodity 1
// alone uses (s,v1), (s,t3), (v1,t1), (v1,t2), the others use the remaining
// arcs. Sinks are listed t2, t1, t3 so lowest-index ties pick t2 first. The
// objective has weak submodularity ratio 0.
FlowInstance MakeZeroRatioInstance(int alpha);

// s -> v with capacity 3, v -> t1 and v -> t2 with capacity 2, for every
// commodity.
FlowInstance MakeTwoSinkInstance(int alpha);

nlohmann::json ToJson(const FlowInstance& inst);
FlowInstance FlowInstanceFromJson(const nlohmann::json& j);

}  // namespace greedy

#endif  // GREEDY_MCFLOW_H_
