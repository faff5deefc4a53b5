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

#include "greedy/experiments.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "greedy/errors.h"
#include "greedy/families.h"
#include "greedy/independence.h"
#include "greedy/mcflow.h"

namespace greedy {

namespace {

using nlohmann::json;

json Labels(Subset s, const GroundSet& ground) {
  json out = json::array();
  for (int e : s.elements()) out.push_back(ground.label(e));
  return out;
}

std::string FormatDouble(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

std::string EpsString(const EpsRational& v) { return v.ToString(); }

// Sorted, duplicate-free list of rationals.
std::vector<Rational> Unique(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

json RatioJson(const RatioWitness& r, const GroundSet& ground) {
  return json{{"ratio", ToString(r.ratio)},
              {"X", r.x.ToString()},
              {"Y", r.y.ToString()},
              {"X_labels", Labels(r.x, ground)},
              {"Y_labels", Labels(r.y, ground)},
              {"numerator", ToString(r.numerator)},
              {"denominator", ToString(r.denominator)},
              {"checked_pairs", r.checked_pairs},
              {"tie", r.tie}};
}

}  // namespace

TiePolicy ResolveTie(const Instance& instance, const std::string& text) {
  if (text == "instance") return instance.preferred_tie;
  return TiePolicy::Parse(text, instance.objective.ground());
}

std::string RunTrace(const Instance& instance, int k, const TiePolicy& tie,
                     bool decimals) {
  if (k < 0) throw InvalidCardinality("k must be nonnegative");
  if (!instance.flow || instance.flow->perturbation.empty()) {
    return TraceToCsv(GreedyAdaptive(instance.objective, k, tie),
                      instance.objective.ground(), decimals);
  }
  const PerturbedTrace t = PerturbedGreedy(*instance.flow, k, tie);
  const GroundSet& ground = instance.objective.ground();
  std::ostringstream out;
  out << "step,pick,label,gain,value,tie_count";
  if (decimals) out << ",gain_decimal,value_decimal";
  out << "\n";
  for (size_t i = 0; i < t.picks.size(); ++i) {
    const EpsRational gain = t.values[i + 1] - t.values[i];
    out << i + 1 << "," << t.picks[i] << "," << ground.label(t.picks[i]) << ","
        << EpsString(gain) << "," << EpsString(t.values[i + 1]) << ","
        << t.tie_counts[i];
    if (decimals) {
      out << "," << ToDecimal(gain.base) << "," << ToDecimal(t.values[i + 1].base);
    }
    out << "\n";
  }
  return out.str();
}

json RunAudit(const Instance& instance, const AuditBundleOptions& options) {
  const SetFunction& f = instance.objective;
  const GroundSet& ground = f.ground();
  const TiePolicy tie = options.tie ? *options.tie : instance.preferred_tie;
  AuditOptions audit;
  audit.scope = options.scope;
  audit.tie = tie;

  json out{{"family", instance.family},
           {"n", f.n()},
           {"tie", tie.ToString()},
           {"scope", ToString(options.scope)}};

  std::optional<Rational> g;
  try {
    const RatioWitness r = WeakSubmodularityRatio(f, tie);
    g = r.ratio;
    out["weak_ratio"] = RatioJson(r, ground);
  } catch (const std::exception& e) {
    out["weak_ratio"] = json{{"error", e.what()}};
  }

  std::vector<Rational> alphas = options.alphas;
  if (alphas.empty()) {
    alphas = {Rational(1), MakeRational(3, 2), Rational(2), Rational(4)};
  }
  std::vector<Rational> gammas = options.gammas;
  if (gammas.empty()) {
    gammas.push_back(Rational(1));
    if (g && *g > 0) gammas.push_back(*g);
  }
  gammas = Unique(gammas);

  out["alpha_augmentable"] = json::array();
  for (const Rational& alpha : alphas) {
    try {
      out["alpha_augmentable"].push_back(
          ToJson(CheckAlphaAugmentable(f, alpha, audit), ground));
    } catch (const std::exception& e) {
      out["alpha_augmentable"].push_back(
          json{{"alpha", ToString(alpha)}, {"error", e.what()}});
    }
  }

  std::set<std::pair<Rational, Rational>> pairs;
  for (const Rational& gamma : gammas) {
    for (const Rational& alpha : alphas) {
      if (gamma > 0 && gamma <= 1 && alpha >= gamma) pairs.emplace(gamma, alpha);
    }
  }
  if (g && *g > 0) pairs.emplace(*g, *g);
  out["gamma_alpha_augmentable"] = json::array();
  for (const auto& [gamma, alpha] : pairs) {
    try {
      out["gamma_alpha_augmentable"].push_back(
          ToJson(CheckGammaAlphaAugmentable(f, gamma, alpha, audit), ground));
    } catch (const std::exception& e) {
      out["gamma_alpha_augmentable"].push_back(json{
          {"gamma", ToString(gamma)}, {"alpha", ToString(alpha)}, {"error", e.what()}});
    }
  }

  out["min_alpha"] = json::array();
  for (const Rational& gamma : gammas) {
    json entry{{"gamma", ToString(gamma)}};
    try {
      entry["alpha"] = MinAlphaFor(f, gamma, audit).ToString();
    } catch (const std::exception& e) {
      entry["error"] = e.what();
    }
    out["min_alpha"].push_back(entry);
  }

  if (instance.system) {
    try {
      const RankQuotientResult r = RankQuotient(*instance.system);
      out["rank_quotient"] = json{{"q", ToString(r.q)},
                                  {"X", r.x.ToString()},
                                  {"X_labels", Labels(r.x, ground)},
                                  {"smallest_basis", r.smallest_basis.ToString()},
                                  {"largest_basis", r.largest_basis.ToString()}};
    } catch (const std::exception& e) {
      out["rank_quotient"] = json{{"error", e.what()}};
    }
  } else {
    out["rank_quotient"] = nullptr;
  }
  return out;
}

namespace {

int MeasureLimit(const RatioTableSpec& spec) {
  if (spec.max_measured_n) return *spec.max_measured_n;
  return spec.family == "critical" ? 16 : 8;
}

bool IsPositiveInteger(const Rational& r) { return r.get_den() == 1 && r > 0; }

}  // namespace

void ValidateGrid(const RatioTableSpec& spec) {
  if (spec.family != "critical" && spec.family != "lower_bound_flow") {
    throw ParameterError("ratio-table supports the families critical and "
                         "lower_bound_flow, not '" + spec.family + "'");
  }
  if (!(spec.tolerance > 0)) throw ParameterError("tolerance must be positive");
  std::vector<std::string> problems;
  for (const Rational& gamma : spec.gammas) {
    for (const Rational& alpha : spec.alphas) {
      for (int k : spec.ks) {
        const std::string where = "(gamma=" + ToString(gamma) +
                                  ", alpha=" + ToString(alpha) +
                                  ", k=" + std::to_string(k) + ")";
        if (spec.family == "critical") {
          try {
            CriticalFunctionParams{gamma, alpha, k}.ValidateParameters();
          } catch (const ParameterError& e) {
            problems.push_back(where + ": " + e.what());
          }
        } else if (gamma != 1) {
          problems.push_back(where + ": flow instances have gamma = 1");
        } else if (!IsPositiveInteger(alpha)) {
          problems.push_back(where + ": alpha must be a positive integer");
        } else if (k < 2) {
          problems.push_back(where + ": k must be at least 2");
        }
      }
    }
  }
  if (!problems.empty()) {
    std::string msg = "infeasible grid points:";
    for (const std::string& p : problems) msg += "\n  " + p;
    throw ParameterError(msg);
  }
}

double LimitRatio(const Rational& gamma, const Rational& alpha) {
  const double a = ToDouble(alpha);
  return a / ToDouble(gamma) * std::exp(a) / std::expm1(a);
}

std::string RunRatioTable(const RatioTableSpec& spec) {
  ValidateGrid(spec);
  const int limit_n = MeasureLimit(spec);
  std::ostringstream out;
  out << kRatioTableHeader << "\n";
  for (const Rational& gamma : spec.gammas) {
    for (const Rational& alpha : spec.alphas) {
      const double limit = LimitRatio(gamma, alpha);
      std::optional<double> previous_gap;
      for (int k : spec.ks) {
        Rational closed;
        std::optional<RatioResult> measured;
        if (spec.family == "critical") {
          const CriticalFunctionParams p{gamma, alpha, k};
          closed = CriticalClosedFormRatio(p);
          if (2 * k <= limit_n && 2 * k <= kMaxGroundSize) {
            measured = ApproximationRatio(MakeCriticalFunction(p), spec.tie,
                                          GreedyVariant::kAdaptive, limit_n);
          }
        } else {
          const int a = static_cast<int>(alpha.get_num().get_si());
          closed = GkRatioClosedForm(a, k);
          const long sinks = 2L * a * k;
          if (sinks <= limit_n && sinks <= kMaxGroundSize) {
            measured = ApproximationRatio(FlowObjective(MakeLowerBoundInstance(a, k)),
                                          spec.tie, GreedyVariant::kAdaptive, limit_n);
          }
        }
        const double gap = std::fabs(ToDouble(closed) - limit);
        out << spec.family << "," << ToString(gamma) << "," << ToString(alpha) << ","
            << k << ",";
        if (measured) {
          out << measured->ratio.ToString() << "," << measured->witness_k;
        } else {
          out << "out-of-guard,";
        }
        out << "," << ToString(closed) << "," << ToDecimal(closed) << ","
            << FormatDouble(limit) << "," << FormatDouble(gap) << ","
            << (previous_gap ? (gap < *previous_gap ? "yes" : "no") : "-") << ","
            << (gap <= spec.tolerance ? "yes" : "no") << "\n";
        previous_gap = gap;
      }
    }
  }
  return out.str();
}

std::string GnuplotScript(const std::string& csv_path) {
  std::ostringstream out;
  out << "set datafile separator ','\n"
      << "set key top right\n"
      << "set xlabel 'k'\n"
      << "set ylabel 'approximation ratio'\n"
      << "plot '" << csv_path << "' using 4:8 skip 1 with linespoints title 'closed form', \\\n"
      << "     '' using 4:9 skip 1 with lines dashtype 2 title 'limit'\n";
  return out.str();
}

std::optional<PickOrderWitness> CheckPickOrder(const SetFunction& f,
                                               const std::vector<int>& expected,
                                               const TiePolicy& tie) {
  const GreedyTrace t =
      GreedyAdaptive(f, static_cast<int>(expected.size()), tie);
  for (size_t i = 0; i < expected.size(); ++i) {
    const int actual = i < t.picks.size() ? t.picks[i] : -1;
    if (actual != expected[i]) {
      return PickOrderWitness{static_cast<int>(i) + 1, expected[i], actual};
    }
  }
  return std::nullopt;
}

namespace {

struct Check {
  std::string id;
  std::function<CheckResult()> run;
};

// Accumulates failures; a check passes when none are recorded.
class Outcome {
 public:
  explicit Outcome(std::string id) : id_(std::move(id)) {}
  void Case() { ++cases_; }
  void Fail(json witness) { failures_.push_back(std::move(witness)); }
  void Expect(bool ok, json witness) {
    Case();
    if (!ok) Fail(std::move(witness));
  }
  CheckResult Finish() const {
    json detail{{"cases", cases_}};
    if (!failures_.empty()) detail["failures"] = failures_;
    return {id_, failures_.empty(), detail};
  }

 private:
  std::string id_;
  int cases_ = 0;
  json failures_ = json::array();
};

json Params(const Rational& gamma, const Rational& alpha, int k) {
  return json{{"gamma", ToString(gamma)}, {"alpha", ToString(alpha)}, {"k", k}};
}

// (gamma, alpha, k) with gamma in {1, 1/2, 1/4}, alpha in {gamma, 1, 2} and
// alpha < k <= max_k.
std::vector<CriticalFunctionParams> CriticalGrid(int max_k) {
  std::vector<CriticalFunctionParams> grid;
  for (Rational gamma : {Rational(1), MakeRational(1, 2), MakeRational(1, 4)}) {
    for (const Rational& alpha : Unique({gamma, Rational(1), Rational(2)})) {
      for (int k = 2; k <= max_k; ++k) {
        if (k > alpha) grid.push_back({gamma, alpha, k});
      }
    }
  }
  return grid;
}

AuditOptions Opts(Scope scope, const TiePolicy& tie = TiePolicy::Lowest()) {
  AuditOptions o;
  o.scope = scope;
  o.tie = tie;
  return o;
}

CheckResult CriticalPickOrder() {
  Outcome out("critical.pick_order");
  for (const CriticalFunctionParams& p : CriticalGrid(6)) {
    std::vector<int> expected(p.k);
    for (int i = 0; i < p.k; ++i) expected[i] = i;
    const auto w = CheckPickOrder(MakeCriticalFunction(p), expected, TiePolicy::Lowest());
    json detail = Params(p.gamma, p.alpha, p.k);
    if (w) detail["step"] = json{{"step", w->step}, {"expected", w->expected}, {"actual", w->actual}};
    out.Expect(!w, detail);
  }
  return out.Finish();
}

CheckResult CriticalRatio() {
  Outcome out("critical.ratio_closed_form");
  for (const CriticalFunctionParams& p : CriticalGrid(6)) {
    const RatioResult r = ApproximationRatio(MakeCriticalFunction(p), TiePolicy::Lowest());
    const Rational closed = CriticalClosedFormRatio(p);
    json detail = Params(p.gamma, p.alpha, p.k);
    detail["measured"] = r.ratio.ToString();
    detail["witness_k"] = r.witness_k;
    detail["closed_form"] = ToString(closed);
    out.Expect(r.ratio == ExtendedRational(closed) && r.witness_k == p.k, detail);
  }
  return out.Finish();
}

CheckResult CriticalWeakMembership() {
  Outcome out("critical.weak_membership");
  for (const CriticalFunctionParams& p : CriticalGrid(6)) {
    const AuditReport r = CheckGammaAlphaAugmentable(MakeCriticalFunction(p), p.gamma,
                                                     p.alpha, Opts(Scope::kWeak));
    out.Expect(r.member, Params(p.gamma, p.alpha, p.k));
  }
  return out.Finish();
}

CheckResult CriticalStrongAugmentable() {
  Outcome out("critical.strong_alpha_augmentable");
  for (int alpha : {1, 2}) {
    for (int k = 2; k <= 4; ++k) {
      if (k < alpha) continue;
      const AuditReport r = CheckAlphaAugmentable(
          MakeCriticalFunction({1, alpha, k}), alpha, Opts(Scope::kStrong));
      out.Expect(r.member, Params(1, alpha, k));
    }
  }
  return out.Finish();
}

CheckResult CriticalSeparates() {
  Outcome out("critical.separates_classes");
  const Rational gamma = MakeRational(1, 2);
  for (Rational alpha : {gamma, Rational(1), Rational(2)}) {
    for (int k = 2; k <= 4; ++k) {
      if (k < alpha) continue;
      const SetFunction f = MakeCriticalFunction({gamma, alpha, k});
      for (Rational other : {Rational(1), MakeRational(3, 2), Rational(2), Rational(4)}) {
        const AuditReport r = CheckAlphaAugmentable(f, other, Opts(Scope::kStrong));
        json detail = Params(gamma, alpha, k);
        detail["audited_alpha"] = ToString(other);
        out.Expect(!r.member && VerifyWitness(f, r), detail);
      }
    }
  }
  return out.Finish();
}

CheckResult FGammaSeparation() {
  Outcome out("f_gamma.separation");
  for (Rational gamma : {MakeRational(1, 2), MakeRational(1, 4), MakeRational(3, 4)}) {
    const SetFunction f = MakeFGamma(gamma);
    const RatioWitness r = WeakSubmodularityRatio(f, TiePolicy::Lowest());
    out.Expect(r.ratio == gamma, json{{"gamma", ToString(gamma)}, {"ratio", ToString(r.ratio)}});
    for (int alpha : {1, 2, 4}) {
      const AuditReport a = CheckAlphaAugmentable(f, alpha, Opts(Scope::kStrong));
      out.Expect(!a.member && VerifyWitness(f, a),
                 json{{"gamma", ToString(gamma)}, {"alpha", alpha}});
    }
    const AuditReport gg = CheckGammaAlphaAugmentable(f, gamma, gamma, Opts(Scope::kWeak));
    out.Expect(gg.member, json{{"gamma", ToString(gamma)}, {"gamma_gamma", false}});
  }
  return out.Finish();
}

CheckResult FQSeparation() {
  Outcome out("f_q.separation");
  const FQFamily fq = MakeFQ(MakeRational(1, 2), 1, 1, 2);
  const RankQuotientResult q = RankQuotient(fq.system);
  out.Expect(q.q == MakeRational(1, 2), json{{"rank_quotient", ToString(q.q)}});
  const RatioWitness r = WeakSubmodularityRatio(fq.objective, fq.preferred_tie);
  const int c = fq.objective.n() - 1;
  out.Expect(r.ratio == 0 && r.x.contains(c),
             json{{"ratio", ToString(r.ratio)}, {"X", r.x.ToString()}});
  return out.Finish();
}

CheckResult SquareNotAugmentable() {
  Outcome out("square.greedy_optimal_not_augmentable");
  const SetFunction f = MakeSquareCardinality(3);
  for (Rational alpha : {MakeRational(1, 2), Rational(1), Rational(2)}) {
    const AuditReport r =
        CheckGammaAlphaAugmentable(f, MakeRational(1, 2), alpha, Opts(Scope::kWeak));
    out.Expect(!r.member && r.witness && r.witness->x.empty(),
               json{{"alpha", ToString(alpha)}});
  }
  const RatioResult ratio = ApproximationRatio(f, TiePolicy::Lowest());
  out.Expect(ratio.ratio == ExtendedRational(1), json{{"ratio", ratio.ratio.ToString()}});
  return out.Finish();
}

// Small instances of every family, used by the containment check.
std::vector<Instance> BuiltinCorpus() {
  std::vector<json> descriptors = {
      {{"family", "critical"}, {"gamma", "1"}, {"alpha", "1"}, {"k", 3}},
      {{"family", "critical"}, {"gamma", "1/2"}, {"alpha", "1"}, {"k", 2}},
      {{"family", "critical"}, {"gamma", "1"}, {"alpha", "2"}, {"k", 3}},
      {{"family", "f_gamma"}, {"gamma", "1/2"}},
      {{"family", "f_q"}, {"q", "1/2"}, {"alpha", "1"}, {"m", 1}, {"n", 2}},
      {{"family", "square"}, {"n", 3}},
      {{"family", "modular"}, {"weights", {"3", "1/2", "2"}}},
      {{"family", "uniform_matroid"}, {"rank", 2}, {"weights", {"1", "2", "3", "1/3"}}},
      {{"family", "weighted_rank"},
       {"weights", {"2", "1", "1", "3"}},
       {"independent_sets", {{0, 1}, {1, 2}, {3}}}},
      {{"family", "two_sink_flow"}, {"alpha", 2}},
      {{"family", "zero_ratio_flow"}, {"alpha", 2}},
  };
  std::vector<Instance> out;
  for (const json& d : descriptors) out.push_back(LoadInstance(d));
  return out;
}

}  // namespace

CheckResult ContainmentCheck(const std::vector<Instance>& corpus) {
  Outcome out("containment.implications");
  for (const Instance& inst : corpus) {
    const SetFunction& f = inst.objective;
    const TiePolicy& tie = inst.preferred_tie;
    const Scope strong = f.n() <= kStrongGuard ? Scope::kStrong : Scope::kWeak;
    for (Rational alpha : {Rational(1), MakeRational(3, 2), Rational(2)}) {
      if (CheckAlphaAugmentable(f, alpha, Opts(strong, tie)).member) {
        out.Expect(CheckGammaAlphaAugmentable(f, 1, alpha, Opts(Scope::kWeak, tie)).member,
                   json{{"family", inst.family}, {"implication", "alpha_aug"},
                        {"alpha", ToString(alpha)}});
      }
    }
    const Rational g = WeakSubmodularityRatio(f, tie).ratio;
    if (g > 0) {
      out.Expect(CheckGammaAlphaAugmentable(f, g, g, Opts(Scope::kWeak, tie)).member,
                 json{{"family", inst.family}, {"implication", "weak_ratio"},
                      {"gamma", ToString(g)}});
    }
    if (inst.system) {
      const Rational q = RankQuotient(*inst.system).q;
      if (q > 0) {
        for (Rational gamma : {MakeRational(1, 2), Rational(1)}) {
          out.Expect(CheckGammaAlphaAugmentable(f, gamma, gamma / q,
                                                Opts(Scope::kWeak, tie)).member,
                     json{{"family", inst.family}, {"implication", "rank_quotient"},
                          {"gamma", ToString(gamma)}, {"q", ToString(q)}});
        }
      }
    }
  }
  return out.Finish();
}

namespace {

// A random independence system on n elements from a few generators.
IndependenceSystem RandomSystem(std::mt19937_64& rng, int n) {
  std::vector<Subset> generators;
  const int count = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    generators.push_back(Subset(rng() & ((uint64_t{1} << n) - 1)));
  }
  std::vector<Rational> w(n);
  for (Rational& x : w) x = MakeRational(static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 3));
  return IndependenceSystem::FromGenerators(GroundSet(n), generators, w);
}

CheckResult IndependenceBound() {
  Outcome out("independence.bound");
  std::vector<IndependenceSystem> systems;
  std::vector<TiePolicy> ties;
  std::mt19937_64 rng(20260517);
  for (int i = 0; i < 10; ++i) {
    systems.push_back(RandomSystem(rng, 4 + i % 5));
    ties.push_back(TiePolicy::Lowest());
  }
  FQFamily fq = MakeFQ(MakeRational(1, 2), 1, 1, 2);
  systems.push_back(fq.system);
  ties.push_back(fq.preferred_tie);
  for (size_t i = 0; i < systems.size(); ++i) {
    const SetFunction f = WeightedRankOracle(systems[i]);
    const Rational q = RankQuotient(systems[i]).q;
    for (Rational gamma : {MakeRational(1, 2), Rational(1)}) {
      for (const Rational& alpha : Unique({gamma, Rational(1), Rational(2), Rational(gamma / q)})) {
        if (alpha < gamma) continue;
        if (!CheckGammaAlphaAugmentable(f, gamma, alpha, Opts(Scope::kWeak, ties[i])).member) {
          continue;
        }
        const BoundReport b = CertifyIndependenceBound(f, gamma, alpha, ties[i]);
        out.Expect(b.holds, json{{"system", i}, {"gamma", ToString(gamma)},
                                 {"alpha", ToString(alpha)}});
      }
    }
    const ExchangeReport e = CheckExchangeProperty(systems[i], ties[i]);
    out.Expect(e.holds, json{{"system", i}, {"exchange_violations", e.violations.size()}});
  }
  return out.Finish();
}

CheckResult TwoSinkValues() {
  Outcome out("flow.two_sink_values");
  const FlowInstance inst = MakeTwoSinkInstance(2);
  const std::vector<std::pair<Subset, long>> expected = {
      {Subset{}, 0}, {Subset{0}, 2}, {Subset{1}, 2}, {Subset{0, 1}, 3}};
  for (const auto& [s, v] : expected) {
    const Rational got = EvaluateObjective(inst, s);
    out.Expect(got == v, json{{"X", s.ToString()}, {"value", ToString(got)}});
  }
  return out.Finish();
}

CheckResult ZeroRatioInstance() {
  Outcome out("flow.zero_ratio");
  const SetFunction f = FlowObjective(MakeZeroRatioInstance(2));
  const RatioWitness r = WeakSubmodularityRatio(f, TiePolicy::Lowest());
  out.Expect(r.ratio == 0, json{{"ratio", ToString(r.ratio)}});
  const GreedyTrace t = GreedyAdaptive(f, 1, TiePolicy::Lowest());
  out.Expect(f.ground().label(t.picks[0]) == "t2",
             json{{"first_pick", f.ground().label(t.picks[0])}});
  return out.Finish();
}

CheckResult FlowStrongAugmentable() {
  Outcome out("flow.strong_augmentable");
  for (int alpha : {1, 2, 3}) {
    out.Expect(CheckAlphaAugmentable(FlowObjective(MakeTwoSinkInstance(alpha)), alpha,
                                     Opts(Scope::kStrong)).member,
               json{{"instance", "two_sink"}, {"alpha", alpha}});
  }
  for (int alpha : {2, 3}) {
    out.Expect(CheckAlphaAugmentable(FlowObjective(MakeZeroRatioInstance(alpha)), alpha,
                                     Opts(Scope::kStrong)).member,
               json{{"instance", "zero_ratio"}, {"alpha", alpha}});
  }
  return out.Finish();
}

CheckResult LowerBoundReproduction() {
  Outcome out("flow.lower_bound_reproduction");
  for (const auto& [alpha, k] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
    const SetFunction f = FlowObjective(MakeLowerBoundInstance(alpha, k));
    std::vector<int> expected(alpha * k);
    for (int j = 0; j < alpha * k; ++j) expected[j] = j;
    const auto w = CheckPickOrder(f, expected, TiePolicy::Lowest());
    const RatioResult r = ApproximationRatio(f, TiePolicy::Lowest());
    const int ak = alpha * k;
    json detail{{"alpha", alpha}, {"k", k}, {"ratio", r.ratio.ToString()}};
    out.Expect(!w && r.greedy_values[ak] == GkGreedyValue(alpha, k) &&
                   r.optimum_values[ak] == GkOptimumValue(alpha, k) &&
                   r.ratio == ExtendedRational(GkRatioClosedForm(alpha, k)),
               detail);
  }
  return out.Finish();
}

CheckResult CriticalReduction() {
  Outcome out("cross_oracle.critical_reduction");
  for (const CriticalFunctionParams& p : CriticalGrid(3)) {
    const SetFunction fast = MakeCriticalFunction(p);
    const SetFunction slow = MakeCriticalFunctionExhaustive(p);
    bool agree = true;
    ForEachSubmask(fast.ground().full(), [&](Subset s) {
      if (fast(s) != slow(s)) agree = false;
    });
    out.Expect(agree, Params(p.gamma, p.alpha, p.k));
  }
  return out.Finish();
}

CheckResult FlowMatchesMaxFlow() {
  Outcome out("cross_oracle.flow_max_flow");
  std::vector<FlowInstance> instances = {MakeTwoSinkInstance(1),
                                         MakeLowerBoundInstance(1, 2),
                                         MakeLowerBoundInstance(1, 3)};
  for (size_t i = 0; i < instances.size(); ++i) {
    const FlowInstance& inst = instances[i];
    bool agree = true;
    ForEachSubmask(inst.SinkGround().full(), [&](Subset s) {
      if (EvaluateObjective(inst, s) != MaxFlow(inst, 0, s)) agree = false;
    });
    out.Expect(agree, json{{"instance", i}});
  }
  return out.Finish();
}

const std::vector<Check>& Checks() {
  static const std::vector<Check> kChecks = {
      {"critical.pick_order", CriticalPickOrder},
      {"critical.ratio_closed_form", CriticalRatio},
      {"critical.weak_membership", CriticalWeakMembership},
      {"critical.strong_alpha_augmentable", CriticalStrongAugmentable},
      {"critical.separates_classes", CriticalSeparates},
      {"f_gamma.separation", FGammaSeparation},
      {"f_q.separation", FQSeparation},
      {"square.greedy_optimal_not_augmentable", SquareNotAugmentable},
      {"containment.implications", [] { return ContainmentCheck(BuiltinCorpus()); }},
      {"independence.bound", IndependenceBound},
      {"flow.two_sink_values", TwoSinkValues},
      {"flow.zero_ratio", ZeroRatioInstance},
      {"flow.strong_augmentable", FlowStrongAugmentable},
      {"flow.lower_bound_reproduction", LowerBoundReproduction},
      {"cross_oracle.critical_reduction", CriticalReduction},
      {"cross_oracle.flow_max_flow", FlowMatchesMaxFlow},
  };
  return kChecks;
}

}  // namespace

const std::vector<std::string>& VerifyCheckIds() {
  static const std::vector<std::string> kIds = [] {
    std::vector<std::string> ids;
    for (const Check& c : Checks()) ids.push_back(c.id);
    return ids;
  }();
  return kIds;
}

std::vector<CheckResult> RunVerify(
    const std::optional<std::vector<std::string>>& filter) {
  if (filter) {
    for (const std::string& id : *filter) {
      const auto& ids = VerifyCheckIds();
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
        throw ParameterError("unknown check '" + id + "'");
      }
    }
  }
  std::vector<CheckResult> results;
  for (const Check& c : Checks()) {
    if (filter && std::find(filter->begin(), filter->end(), c.id) == filter->end()) {
      continue;
    }
    try {
      results.push_back(c.run());
    } catch (const std::exception& e) {
      results.push_back({c.id, false, json{{"error", e.what()}}});
    }
  }
  return results;
}

json ToJson(const std::vector<CheckResult>& results) {
  json checks = json::array();
  bool pass = true;
  for (const CheckResult& r : results) {
    checks.push_back(json{{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    pass = pass && r.pass;
  }
  return json{{"pass", pass}, {"checks", checks}};
}

}  // namespace greedy
