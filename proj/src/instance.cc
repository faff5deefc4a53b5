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

#include "greedy/instance.h"

#include <sstream>

#include "greedy/errors.h"

namespace greedy {

namespace {

using nlohmann::json;

[[noreturn]] void FieldError(const std::string& field, const std::string& msg) {
  throw ParseError("field '" + field + "': " + msg);
}

const json& Require(const json& j, const std::string& field) {
  if (!j.contains(field)) FieldError(field, "missing");
  return j.at(field);
}

Rational RationalValue(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return ParseRational(v.get<std::string>());
    } catch (const ParseError& e) {
      FieldError(field, e.what());
    }
  }
  FieldError(field, "expected a rational (\"p/q\" string or integer)");
}

Rational RationalField(const json& j, const std::string& field) {
  return RationalValue(Require(j, field), field);
}

int IntField(const json& j, const std::string& field) {
  const json& v = Require(j, field);
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    Rational r = RationalValue(v, field);
    if (r.get_den() == 1 && r.get_num().fits_sint_p()) {
      return static_cast<int>(r.get_num().get_si());
    }
  }
  FieldError(field, "expected an integer");
}

bool BoolField(const json& j, const std::string& field, bool fallback) {
  if (!j.contains(field)) return fallback;
  const json& v = j.at(field);
  if (v.is_boolean()) return v.get<bool>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "true" || s == "1") return true;
    if (s == "false" || s == "0") return false;
  }
  FieldError(field, "expected a boolean");
}

// A list given as a JSON array or as a ';'-separated string.
std::vector<json> ListField(const json& j, const std::string& field) {
  const json& v = Require(j, field);
  if (v.is_array()) return v.get<std::vector<json>>();
  if (v.is_string()) {
    std::vector<json> out;
    std::stringstream in(v.get<std::string>());
    std::string item;
    while (std::getline(in, item, ';')) out.emplace_back(item);
    return out;
  }
  FieldError(field, "expected a list");
}

std::vector<Rational> RationalList(const json& j, const std::string& field) {
  std::vector<Rational> out;
  const std::vector<json> items = ListField(j, field);
  for (size_t i = 0; i < items.size(); ++i) {
    out.push_back(RationalValue(items[i], field + "[" + std::to_string(i) + "]"));
  }
  if (out.empty()) FieldError(field, "must not be empty");
  return out;
}

std::vector<std::string> Labels(const json& j, int n) {
  if (!j.contains("labels")) return {};
  const json& v = j.at("labels");
  if (!v.is_array()) FieldError("labels", "expected a list of strings");
  std::vector<std::string> labels;
  for (const json& l : v) {
    if (!l.is_string()) FieldError("labels", "expected a list of strings");
    labels.push_back(l.get<std::string>());
  }
  if (static_cast<int>(labels.size()) != n) {
    FieldError("labels", "expected " + std::to_string(n) + " labels");
  }
  return labels;
}

Instance Make(const json& d, SetFunction f) {
  return Instance{d.at("family").get<std::string>(), d, std::move(f),
                  std::nullopt, std::nullopt, std::nullopt, TiePolicy::Lowest()};
}

Instance WithSystem(const json& d, IndependenceSystem sys) {
  Instance inst = Make(d, WeightedRankOracle(sys));
  inst.system = std::move(sys);
  return inst;
}

Instance WithFlow(const json& d, FlowInstance flow) {
  Instance inst = Make(d, FlowObjective(flow));
  inst.flow = std::move(flow);
  return inst;
}

}  // namespace

const std::vector<std::string>& KnownFamilies() {
  static const std::vector<std::string> kFamilies = {
      "critical",        "f_gamma",          "f_q",
      "square",          "modular",          "weighted_rank",
      "uniform_matroid", "lower_bound_flow", "zero_ratio_flow",
      "two_sink_flow",   "flow"};
  return kFamilies;
}

Instance LoadInstance(const json& d) {
  if (!d.is_object()) throw ParseError("descriptor must be a JSON object");
  const json& tag = Require(d, "family");
  if (!tag.is_string()) FieldError("family", "expected a string");
  const std::string family = tag.get<std::string>();

  if (family == "critical") {
    CriticalFunctionParams p{RationalField(d, "gamma"), RationalField(d, "alpha"),
                             IntField(d, "k")};
    Instance inst = Make(d, MakeCriticalFunction(p));
    inst.critical = p;
    return inst;
  }
  if (family == "f_gamma") return Make(d, MakeFGamma(RationalField(d, "gamma")));
  if (family == "f_q") {
    FQFamily fq = MakeFQ(RationalField(d, "q"), RationalField(d, "alpha"),
                         IntField(d, "m"), IntField(d, "n"));
    Instance inst = Make(d, fq.objective);
    inst.system = std::move(fq.system);
    inst.preferred_tie = fq.preferred_tie;
    return inst;
  }
  if (family == "square") {
    const int n = IntField(d, "n");
    if (n < 1 || n > kMaxGroundSize) FieldError("n", "must lie in [1, 64]");
    return Make(d, MakeSquareCardinality(n));
  }
  if (family == "modular") {
    std::vector<Rational> w = RationalList(d, "weights");
    const int n = static_cast<int>(w.size());
    SetFunction plain = MakeModular(w);
    return Make(d, SetFunction(GroundSet(n, Labels(d, n)),
                               [plain](Subset s) { return plain(s); }));
  }
  if (family == "weighted_rank") {
    std::vector<Rational> w = RationalList(d, "weights");
    const int n = static_cast<int>(w.size());
    if (n > kMaxGroundSize) FieldError("weights", "at most 64 elements");
    std::vector<Subset> generators;
    const std::vector<json> sets = ListField(d, "independent_sets");
    for (size_t i = 0; i < sets.size(); ++i) {
      const std::string where = "independent_sets[" + std::to_string(i) + "]";
      if (!sets[i].is_array()) FieldError(where, "expected a list of element indices");
      Subset s;
      for (const json& e : sets[i]) {
        if (!e.is_number_integer() || e.get<int>() < 0 || e.get<int>() >= n) {
          FieldError(where, "element index out of range");
        }
        s = s.with(e.get<int>());
      }
      generators.push_back(s);
    }
    return WithSystem(d, IndependenceSystem::FromGenerators(
                             GroundSet(n, Labels(d, n)), generators, w));
  }
  if (family == "uniform_matroid") {
    std::vector<Rational> w = RationalList(d, "weights");
    const int n = static_cast<int>(w.size());
    const int rank = IntField(d, "rank");
    if (rank < 0) FieldError("rank", "must be nonnegative");
    return WithSystem(d, IndependenceSystem::Uniform(GroundSet(n, Labels(d, n)),
                                                     rank, w));
  }
  if (family == "lower_bound_flow") {
    return WithFlow(d, MakeLowerBoundInstance(IntField(d, "alpha"), IntField(d, "k"),
                                              BoolField(d, "perturbed", false)));
  }
  if (family == "zero_ratio_flow") {
    return WithFlow(d, MakeZeroRatioInstance(IntField(d, "alpha")));
  }
  if (family == "two_sink_flow") {
    return WithFlow(d, MakeTwoSinkInstance(IntField(d, "alpha")));
  }
  if (family == "flow") {
    const json& body = Require(d, "instance");
    try {
      return WithFlow(d, FlowInstanceFromJson(body));
    } catch (const ParseError& e) {
      FieldError("instance", e.what());
    }
  }
  std::string known;
  for (const std::string& f : KnownFamilies()) known += (known.empty() ? "" : ", ") + f;
  FieldError("family", "unknown family '" + family + "' (known: " + known + ")");
}

json ParseDescriptor(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column pair.
    size_t line = 1;
    size_t column = 1;
    for (size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("descriptor syntax error at line " + std::to_string(line) +
                     ", column " + std::to_string(column) + ": " + e.what());
  }
}

json DescriptorFromParams(const std::string& family, const std::string& params) {
  json d;
  d["family"] = family;
  std::stringstream in(params);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    const size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw ParseError("parameter '" + item + "' is not of the form key=value");
    }
    d[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return d;
}

json ExpandDescriptor(const Instance& instance) {
  if (instance.flow) {
    return json{{"family", "flow"}, {"instance", ToJson(*instance.flow)}};
  }
  json out = instance.descriptor;
  out["n"] = instance.objective.n();
  if (!out.contains("labels") && !instance.objective.ground().labels().empty()) {
    out["labels"] = instance.objective.ground().labels();
  }
  return out;
}

}  // namespace greedy
