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

#include "greedy/mcflow.h"

#include <deque>
#include <memory>
#include <optional>

#include "greedy/errors.h"

namespace greedy {

void FlowInstance::Validate() const {
  auto fail = [](const std::string& msg) { throw ParseError("flow instance: " + msg); };
  if (vertices < 1) fail("needs at least one vertex");
  if (!labels.empty() && static_cast<int>(labels.size()) != vertices) {
    fail("label count does not match vertex count");
  }
  if (source < 0 || source >= vertices) fail("source out of range");
  if (sinks.empty() || static_cast<int>(sinks.size()) > kMaxGroundSize) {
    fail("needs between 1 and 64 sinks");
  }
  std::vector<bool> seen(vertices);
  for (int t : sinks) {
    if (t < 0 || t >= vertices) fail("sink out of range");
    if (t == source) fail("the source cannot be a sink");
    if (seen[t]) fail("duplicate sink");
    seen[t] = true;
  }
  if (commodities < 1) fail("needs at least one commodity");
  for (const Arc& a : arcs) {
    if (a.from < 0 || a.from >= vertices || a.to < 0 || a.to >= vertices) {
      fail("arc endpoint out of range");
    }
  }
  if (static_cast<int>(capacity.size()) != commodities) {
    fail("needs one capacity list per commodity");
  }
  for (const auto& caps : capacity) {
    if (caps.size() != arcs.size()) fail("needs one capacity per arc");
    for (const ExtendedRational& c : caps) {
      if (c.is_finite() && c.value() < 0) fail("negative capacity");
    }
  }
  if (!perturbation.empty()) {
    if (static_cast<int>(perturbation.size()) != commodities) {
      fail("perturbation shape does not match capacities");
    }
    for (const auto& p : perturbation) {
      if (p.size() != arcs.size()) fail("perturbation shape does not match arcs");
      for (const Rational& v : p) {
        if (v < 0) fail("negative perturbation");
      }
    }
  }
}

std::string FlowInstance::VertexLabel(int v) const {
  return labels.empty() ? std::to_string(v) : labels[v];
}

GroundSet FlowInstance::SinkGround() const {
  std::vector<std::string> names;
  for (int t : sinks) names.push_back(VertexLabel(t));
  return GroundSet(num_sinks(), std::move(names));
}

Rational FlowInstance::InfinityStandIn() const {
  Rational total = 1;
  for (const auto& caps : capacity) {
    for (const ExtendedRational& c : caps) {
      if (c.is_finite()) total += c.value();
    }
  }
  return total;
}

namespace {

Rational FiniteCapacity(const FlowInstance& inst, int commodity, int arc,
                        const Rational& stand_in) {
  const ExtendedRational& c = inst.capacity[commodity][arc];
  return c.is_infinite() ? stand_in : c.value();
}

template <typename Rhs>
Rhs Capacity(const FlowInstance& inst, int commodity, int arc,
             const Rational& stand_in);

template <>
Rational Capacity<Rational>(const FlowInstance& inst, int commodity, int arc,
                            const Rational& stand_in) {
  return FiniteCapacity(inst, commodity, arc, stand_in);
}

template <>
EpsRational Capacity<EpsRational>(const FlowInstance& inst, int commodity,
                                  int arc, const Rational& stand_in) {
  Rational eps = inst.perturbation.empty() ? Rational(0)
                                           : inst.perturbation[commodity][arc];
  return EpsRational(FiniteCapacity(inst, commodity, arc, stand_in), eps);
}

template <typename Rhs>
Rhs SolveObjective(const FlowInstance& inst, Subset selected, int guard) {
  if (selected.empty()) return Rhs(Rational(0));
  if (!selected.is_subset_of(Subset::Full(inst.num_sinks()))) {
    throw ParameterError("sink subset out of range");
  }
  const Rational stand_in = inst.InfinityStandIn();
  const Rhs zero(Rational(0));

  // Variables: theta_i(a) for arcs usable by commodity i, then d_t.
  std::vector<std::vector<int>> var(inst.commodities,
                                    std::vector<int>(inst.arcs.size(), -1));
  std::vector<Rhs> cap;
  int num_vars = 0;
  for (int i = 0; i < inst.commodities; ++i) {
    for (size_t a = 0; a < inst.arcs.size(); ++a) {
      Rhs c = Capacity<Rhs>(inst, i, static_cast<int>(a), stand_in);
      if (c > zero) {
        var[i][a] = num_vars++;
        cap.push_back(std::move(c));
      }
    }
  }
  std::vector<int> sink_of(inst.vertices, -1);
  for (int e = 0; e < inst.num_sinks(); ++e) sink_of[inst.sinks[e]] = e;
  std::vector<int> demand_var(inst.num_sinks(), -1);
  for (int e : selected.elements()) demand_var[e] = num_vars++;
  if (num_vars > guard) {
    throw SizeLimitExceeded("flow LP needs " + std::to_string(num_vars) +
                            " variables, guard is " + std::to_string(guard));
  }

  std::vector<SparseRow> rows;
  std::vector<Rhs> rhs;
  for (int i = 0; i < inst.commodities; ++i) {
    for (size_t a = 0; a < inst.arcs.size(); ++a) {
      if (var[i][a] < 0) continue;
      rows.push_back({{var[i][a], Rational(1)}});
      rhs.push_back(cap[var[i][a]]);
    }
  }
  for (int i = 0; i < inst.commodities; ++i) {
    // net[v] = inflow - outflow of commodity i at v.
    std::vector<SparseRow> net(inst.vertices);
    std::vector<bool> has_out(inst.vertices);
    for (size_t a = 0; a < inst.arcs.size(); ++a) {
      const int x = var[i][a];
      if (x < 0) continue;
      net[inst.arcs[a].to].push_back({x, Rational(1)});
      net[inst.arcs[a].from].push_back({x, Rational(-1)});
      has_out[inst.arcs[a].from] = true;
    }
    auto negated = [](SparseRow row) {
      for (auto& entry : row) entry.second = -entry.second;
      return row;
    };
    for (int v = 0; v < inst.vertices; ++v) {
      if (v == inst.source || net[v].empty()) {
        if (v != inst.source && sink_of[v] >= 0 && demand_var[sink_of[v]] >= 0) {
          // Selected sink with no usable arcs: d_t <= 0.
          rows.push_back({{demand_var[sink_of[v]], Rational(1)}});
          rhs.push_back(zero);
        }
        continue;
      }
      const int e = sink_of[v];
      if (e < 0) {
        rows.push_back(net[v]);
        rhs.push_back(zero);
        rows.push_back(negated(net[v]));
        rhs.push_back(zero);
      } else if (demand_var[e] >= 0) {
        SparseRow row = negated(net[v]);
        row.push_back({demand_var[e], Rational(1)});
        rows.push_back(std::move(row));
        rhs.push_back(zero);
      } else if (has_out[v]) {
        rows.push_back(negated(net[v]));
        rhs.push_back(zero);
      }
    }
  }
  std::vector<Rational> objective(num_vars);
  for (int e : selected.elements()) objective[demand_var[e]] = 1;
  return MaximizeFromOrigin<Rhs>(num_vars, rows, rhs, objective).objective;
}

}  // namespace

Rational MaxFlow(const FlowInstance& inst, int commodity, Subset selected) {
  if (commodity < 0 || commodity >= inst.commodities) {
    throw ParameterError("commodity out of range");
  }
  if (selected.empty()) return 0;
  const Rational stand_in = inst.InfinityStandIn();
  struct Edge {
    int to;
    Rational residual;
  };
  std::vector<Edge> edges;
  const int super_sink = inst.vertices;
  std::vector<std::vector<int>> adj(inst.vertices + 1);
  auto add = [&](int u, int v, const Rational& c) {
    adj[u].push_back(static_cast<int>(edges.size()));
    edges.push_back({v, c});
    adj[v].push_back(static_cast<int>(edges.size()));
    edges.push_back({u, Rational(0)});
  };
  Rational total = 0;
  for (size_t a = 0; a < inst.arcs.size(); ++a) {
    Rational c = FiniteCapacity(inst, commodity, static_cast<int>(a), stand_in);
    if (c <= 0) continue;
    add(inst.arcs[a].from, inst.arcs[a].to, c);
    total += c;
  }
  for (int e : selected.elements()) add(inst.sinks[e], super_sink, total);

  Rational flow = 0;
  while (true) {
    std::vector<int> via(inst.vertices + 1, -1);
    std::deque<int> queue{inst.source};
    std::vector<bool> seen(inst.vertices + 1);
    seen[inst.source] = true;
    while (!queue.empty() && !seen[super_sink]) {
      const int u = queue.front();
      queue.pop_front();
      for (int id : adj[u]) {
        const Edge& edge = edges[id];
        if (seen[edge.to] || edge.residual <= 0) continue;
        seen[edge.to] = true;
        via[edge.to] = id;
        queue.push_back(edge.to);
      }
    }
    if (!seen[super_sink]) break;
    std::optional<Rational> bottleneck;
    for (int v = super_sink; v != inst.source; v = edges[via[v] ^ 1].to) {
      const Rational& r = edges[via[v]].residual;
      if (!bottleneck || r < *bottleneck) bottleneck = r;
    }
    for (int v = super_sink; v != inst.source; v = edges[via[v] ^ 1].to) {
      edges[via[v]].residual -= *bottleneck;
      edges[via[v] ^ 1].residual += *bottleneck;
    }
    flow += *bottleneck;
  }
  return flow;
}

Rational EvaluateObjective(const FlowInstance& inst, Subset sinks, int guard) {
  return SolveObjective<Rational>(inst, sinks, guard);
}

EpsRational EvaluatePerturbed(const FlowInstance& inst, Subset sinks,
                              int guard) {
  return SolveObjective<EpsRational>(inst, sinks, guard);
}

SetFunction FlowObjective(const FlowInstance& inst, int guard) {
  inst.Validate();
  auto shared = std::make_shared<const FlowInstance>(inst);
  return Memoize(SetFunction(inst.SinkGround(), [shared, guard](Subset s) {
    return EvaluateObjective(*shared, s, guard);
  }));
}

PerturbedTrace PerturbedGreedy(const FlowInstance& inst, int k,
                               const TiePolicy& tie, int guard) {
  inst.Validate();
  if (k < 0 || k > inst.num_sinks()) {
    throw InvalidCardinality("cardinality " + std::to_string(k) +
                             " outside [0, " + std::to_string(inst.num_sinks()) +
                             "]");
  }
  PerturbedTrace trace;
  Subset current;
  trace.values.push_back(EvaluatePerturbed(inst, current, guard));
  for (int step = 0; step < k; ++step) {
    std::vector<int> tied;
    EpsRational best;
    for (int e = 0; e < inst.num_sinks(); ++e) {
      if (current.contains(e)) continue;
      EpsRational v = EvaluatePerturbed(inst, current.with(e), guard);
      if (tied.empty() || v > best) {
        tied.assign(1, e);
        best = v;
      } else if (v == best) {
        tied.push_back(e);
      }
    }
    const int pick = tie.Choose(tied);
    current = current.with(pick);
    trace.picks.push_back(pick);
    trace.values.push_back(best);
    trace.tie_counts.push_back(static_cast<int>(tied.size()));
  }
  return trace;
}

namespace {

Rational GkScale(int k) { return Rational(k, k - 1); }

void CheckGkParams(int alpha, int k) {
  if (alpha < 1) throw ParameterError("G_k requires alpha >= 1");
  if (k < 2) throw ParameterError("G_k requires k >= 2");
}

}  // namespace

FlowInstance MakeLowerBoundInstance(int alpha, int k, bool perturbed) {
  CheckGkParams(alpha, k);
  if (2 * alpha * k > kMaxGroundSize) {
    throw ParameterError("G_k with 2 alpha k > 64 sinks is not representable");
  }
  const int ak = alpha * k;
  const Rational x = GkScale(k);
  FlowInstance inst;
  inst.vertices = 1 + ak + 2 * ak;
  inst.commodities = alpha;
  inst.source = 0;
  inst.labels.push_back("s");
  for (int j = 1; j <= ak; ++j) inst.labels.push_back("v" + std::to_string(j));
  for (int m = 1; m <= 2 * ak; ++m) inst.labels.push_back("t" + std::to_string(m));
  auto v = [](int j) { return j; };
  auto t = [ak](int m) { return ak + m; };
  for (int m = 1; m <= 2 * ak; ++m) inst.sinks.push_back(t(m));
  inst.capacity.assign(alpha, {});
  inst.perturbation.assign(alpha, {});

  // Adds an arc with per-commodity capacities and offsets.
  auto add = [&](int from, int to, const std::vector<ExtendedRational>& caps,
                 const std::vector<Rational>& eps) {
    inst.arcs.push_back({from, to});
    for (int i = 0; i < alpha; ++i) {
      inst.capacity[i].push_back(caps[i]);
      inst.perturbation[i].push_back(eps[i]);
    }
  };
  const std::vector<Rational> no_eps(alpha, Rational(0));
  for (int j = 1; j <= ak; ++j) {
    const Rational c = Pow(x, ak - j + 1);
    const std::vector<ExtendedRational> all(alpha, ExtendedRational(c));
    const std::vector<Rational> eps(alpha, Rational(2 * ak - j));
    add(0, v(j), all, eps);
    add(v(j), t(j), all, eps);
  }
  for (int j = 1; j <= ak; ++j) {
    const Rational c = Pow(x, ak - j + 1) / k;
    for (int block = 1; block <= alpha; ++block) {
      std::vector<ExtendedRational> caps(alpha, ExtendedRational(0));
      caps[block - 1] = c;
      for (int m = 1; m <= k; ++m) {
        add(v(j), t((alpha + block - 1) * k + m), caps, no_eps);
      }
    }
  }
  for (int m = 1; m <= ak; ++m) {
    const int block = (m + k - 1) / k;
    const int sink = ak + m;
    std::vector<ExtendedRational> caps(alpha, ExtendedRational::Infinity());
    caps[block - 1] = 1;
    std::vector<Rational> eps(alpha, Rational(0));
    eps[block - 1] = 2 * ak - sink;
    add(0, t(sink), caps, eps);
  }
  if (!perturbed) inst.perturbation.clear();
  inst.Validate();
  return inst;
}

Rational GkRatioClosedForm(int alpha, int k) {
  CheckGkParams(alpha, k);
  const Rational p = Pow(GkScale(k), alpha * k);
  return Rational(alpha * p / (p - 1));
}

Rational GkGreedyValue(int alpha, int k) {
  CheckGkParams(alpha, k);
  return Rational(k * (Pow(GkScale(k), alpha * k) - 1));
}

Rational GkOptimumValue(int alpha, int k) {
  CheckGkParams(alpha, k);
  return Rational(alpha * k * Pow(GkScale(k), alpha * k));
}

FlowInstance MakeZeroRatioInstance(int alpha) {
  if (alpha < 2) throw ParameterError("the zero-ratio instance needs alpha >= 2");
  FlowInstance inst;
  inst.vertices = 6;
  inst.labels = {"s", "v1", "v2", "t1", "t2", "t3"};
  inst.commodities = alpha;
  inst.source = 0;
  inst.sinks = {4, 3, 5};
  inst.arcs = {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 3}, {1, 4}, {2, 4}, {2, 5}};
  const std::vector<bool> first_only = {true,  false, false, true,
                                        true,  true,  false, false};
  inst.capacity.assign(alpha, {});
  for (int i = 0; i < alpha; ++i) {
    for (bool first : first_only) {
      const bool usable = (i == 0) == first;
      inst.capacity[i].push_back(ExtendedRational(usable ? 1 : 0));
    }
  }
  inst.Validate();
  return inst;
}

FlowInstance MakeTwoSinkInstance(int alpha) {
  if (alpha < 1) throw ParameterError("the two-sink instance needs alpha >= 1");
  FlowInstance inst;
  inst.vertices = 4;
  inst.labels = {"s", "v", "t1", "t2"};
  inst.commodities = alpha;
  inst.source = 0;
  inst.sinks = {2, 3};
  inst.arcs = {{0, 1}, {1, 2}, {1, 3}};
  inst.capacity.assign(alpha, {ExtendedRational(3), ExtendedRational(2),
                               ExtendedRational(2)});
  inst.Validate();
  return inst;
}

nlohmann::json ToJson(const FlowInstance& inst) {
  nlohmann::json j;
  j["vertices"] = inst.vertices;
  if (!inst.labels.empty()) j["labels"] = inst.labels;
  j["source"] = inst.source;
  j["sinks"] = inst.sinks;
  j["commodities"] = inst.commodities;
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : inst.arcs) arcs.push_back({a.from, a.to});
  j["arcs"] = arcs;
  nlohmann::json caps = nlohmann::json::array();
  for (const auto& row : inst.capacity) {
    nlohmann::json out = nlohmann::json::array();
    for (const ExtendedRational& c : row) out.push_back(c.ToString());
    caps.push_back(out);
  }
  j["capacities"] = caps;
  if (!inst.perturbation.empty()) {
    nlohmann::json pert = nlohmann::json::array();
    for (const auto& row : inst.perturbation) {
      nlohmann::json out = nlohmann::json::array();
      for (const Rational& c : row) out.push_back(ToString(c));
      pert.push_back(out);
    }
    j["perturbation"] = pert;
  }
  return j;
}

namespace {

const nlohmann::json& Field(const nlohmann::json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw ParseError(std::string("flow instance: missing field '") + name + "'");
  }
  return j.at(name);
}

std::string ScalarText(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError("flow instance: " + where +
                   " must be a string (\"p/q\" or \"inf\") or an integer");
}

int IntField(const nlohmann::json& j, const char* name) {
  const nlohmann::json& v = Field(j, name);
  if (!v.is_number_integer()) {
    throw ParseError(std::string("flow instance: field '") + name +
                     "' must be an integer");
  }
  return v.get<int>();
}

}  // namespace

FlowInstance FlowInstanceFromJson(const nlohmann::json& j) {
  FlowInstance inst;
  try {
    inst.vertices = IntField(j, "vertices");
    inst.source = IntField(j, "source");
    inst.commodities = IntField(j, "commodities");
    if (j.contains("labels")) {
      inst.labels = j.at("labels").get<std::vector<std::string>>();
    }
    inst.sinks = Field(j, "sinks").get<std::vector<int>>();
    for (const auto& a : Field(j, "arcs")) {
      if (!a.is_array() || a.size() != 2) {
        throw ParseError("flow instance: each arc must be a pair [from, to]");
      }
      inst.arcs.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    const nlohmann::json& caps = Field(j, "capacities");
    for (size_t i = 0; i < caps.size(); ++i) {
      std::vector<ExtendedRational> row;
      for (size_t a = 0; a < caps[i].size(); ++a) {
        row.push_back(ExtendedRational::Parse(ScalarText(
            caps[i][a], "capacities[" + std::to_string(i) + "][" +
                            std::to_string(a) + "]")));
      }
      inst.capacity.push_back(std::move(row));
    }
    if (j.contains("perturbation")) {
      for (const auto& row_json : j.at("perturbation")) {
        std::vector<Rational> row;
        for (const auto& v : row_json) {
          row.push_back(ParseRational(ScalarText(v, "perturbation entry")));
        }
        inst.perturbation.push_back(std::move(row));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("flow instance: ") + e.what());
  }
  inst.Validate();
  return inst;
}

}  // namespace greedy
