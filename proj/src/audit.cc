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

#include "greedy/audit.h"

#include <algorithm>
#include <cstdint>

#include "greedy/errors.h"

namespace greedy {

std::string ToString(Scope scope) {
  return scope == Scope::kWeak ? "weak" : "strong";
}

std::string ToString(Existential existential) {
  return existential == Existential::kOutsideX ? "Y\\X" : "Y";
}

namespace {

constexpr uint64_t kNoElement = 0xff;

int GuardFor(const AuditOptions& options) {
  return options.scope == Scope::kStrong ? options.strong_guard
                                         : options.weak_guard;
}

void CheckGuard(int n, int guard, const std::string& what) {
  if (n > guard) {
    throw SizeLimitExceeded(what + " needs n <= " + std::to_string(guard) +
                            ", got " + std::to_string(n));
  }
}

// Table-backed view of f for the exhaustive walks below.
struct Table {
  explicit Table(const SetFunction& f) : n(f.n()), values(size_t{1} << n) {
    for (uint64_t m = 0; m < values.size(); ++m) values[m] = f(Subset(m));
  }
  const Rational& operator[](Subset s) const { return values[s.mask()]; }

  int n;
  std::vector<Rational> values;
};

std::vector<Subset> GreedyChainOf(const Table& t, const GroundSet& ground,
                                  const TiePolicy& tie) {
  SetFunction view(ground, [&t](Subset s) { return t[s]; });
  return GreedyNonAdaptive(view, ground.size(), tie).chain;
}

std::vector<Subset> ScopeSets(const Table& t, const GroundSet& ground,
                              Scope scope, const TiePolicy& tie) {
  if (scope == Scope::kWeak) return GreedyChainOf(t, ground, tie);
  std::vector<Subset> all;
  all.reserve(t.values.size());
  for (uint64_t m = 0; m < t.values.size(); ++m) all.emplace_back(m);
  return all;
}

// Calls visit(Y', best) for every nonempty Y' subset of U\X, where `best`
// is an element of Y' with the largest gain at X (lowest index on ties).
// Submasks are visited in increasing order, so the entry for Y' minus its
// lowest element is always ready.
template <typename Visit>
void ForEachOutside(const Table& t, Subset x, std::vector<uint8_t>& argmax,
                    std::vector<Rational>& gains, Visit&& visit) {
  const Subset complement = Subset::Full(t.n) - x;
  const Rational& fx = t[x];
  for (int e : complement.elements()) gains[e] = t[x.with(e)] - fx;
  const uint64_t c = complement.mask();
  argmax[0] = kNoElement;
  for (uint64_t sub = (0 - c) & c; sub != 0; sub = (sub - c) & c) {
    const int low = std::countr_zero(sub);
    const uint64_t rest = sub & (sub - 1);
    int best = low;
    if (rest != 0) {
      const int other = argmax[rest];
      if (gains[other] > gains[low]) best = other;
    }
    argmax[sub] = static_cast<uint8_t>(best);
    if (!visit(Subset(sub), best)) return;
  }
}

// A reduced candidate pair: Y = Y' plus `extra` elements of X, and the
// best gain available to the existential quantifier.
struct Candidate {
  Subset y;
  Rational best;
};

// The worst-case completions of Y' by elements of X. Elements of X have gain
// zero, so only |Y n X| matters: Y n X empty, and either a single element of
// X (y may be drawn from Y) or all of X (y restricted to Y\X, negative gain).
int Candidates(Subset x, Subset y_out, const Rational& best_out,
               Existential existential, Candidate out[2]) {
  int count = 0;
  out[count++] = {y_out, best_out};
  if (x.empty()) return count;
  if (existential == Existential::kAnyInY) {
    out[count++] = {y_out.with(x.lowest()), best_out > 0 ? best_out : Rational(0)};
  } else if (best_out < 0) {
    out[count++] = {y_out | x, best_out};
  }
  return count;
}

AuditReport RunAugmentation(const SetFunction& f, const Rational& gamma,
                            const Rational& alpha, const AuditOptions& options,
                            Existential default_existential,
                            const std::string& name) {
  CheckGuard(f.n(), GuardFor(options), name + " (" + ToString(options.scope) +
                                           " scope)");
  AuditReport report;
  report.audit = name;
  report.gamma = gamma;
  report.alpha = alpha;
  report.scope = options.scope;
  report.existential = options.existential.value_or(default_existential);
  report.tie = options.tie.ToString();

  const Table t(f);
  std::vector<uint8_t> argmax(t.values.size());
  std::vector<Rational> gains(f.n());
  for (Subset x : ScopeSets(t, f.ground(), options.scope, options.tie)) {
    const Rational alpha_fx = alpha * t[x];
    ForEachOutside(t, x, argmax, gains, [&](Subset y_out, int best) {
      const Rational num = gamma * t[x | y_out] - alpha_fx;
      Candidate cands[2];
      const int count =
          Candidates(x, y_out, gains[best], report.existential, cands);
      for (int i = 0; i < count; ++i) {
        ++report.checked_pairs;
        const int size = cands[i].y.size();
        if (cands[i].best * size < num) {
          report.member = false;
          report.witness = AuditWitness{x, cands[i].y, cands[i].best,
                                        Rational(num / size)};
          return false;
        }
      }
      return true;
    });
    if (!report.member) break;
  }
  return report;
}

nlohmann::json SubsetJson(Subset s) { return s.elements(); }

nlohmann::json SubsetLabels(Subset s, const GroundSet& ground) {
  nlohmann::json out = nlohmann::json::array();
  for (int e : s.elements()) out.push_back(ground.label(e));
  return out;
}

}  // namespace

nlohmann::json ToJson(const AuditReport& report, const GroundSet& ground) {
  nlohmann::json out;
  out["audit"] = report.audit;
  out["verdict"] = report.member ? "member" : "non-member";
  out["gamma"] = ToString(report.gamma);
  out["alpha"] = ToString(report.alpha);
  out["scope"] = ToString(report.scope);
  out["existential_scope"] = ToString(report.existential);
  out["tie"] = report.tie;
  out["checked_pairs"] = report.checked_pairs;
  if (report.witness) {
    const AuditWitness& w = *report.witness;
    out["witness"] = {{"X", SubsetJson(w.x)},
                      {"Y", SubsetJson(w.y)},
                      {"X_labels", SubsetLabels(w.x, ground)},
                      {"Y_labels", SubsetLabels(w.y, ground)},
                      {"lhs", ToString(w.lhs)},
                      {"rhs", ToString(w.rhs)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

bool VerifyWitness(const SetFunction& f, const AuditReport& report) {
  if (report.member || !report.witness) return false;
  const AuditWitness& w = *report.witness;
  if (w.y.empty() || w.y.is_subset_of(w.x)) return false;
  const Subset pool =
      report.existential == Existential::kOutsideX ? w.y - w.x : w.y;
  const Rational fx = f(w.x);
  std::optional<Rational> lhs;
  for (int e : pool.elements()) {
    Rational g = f(w.x.with(e)) - fx;
    if (!lhs || g > *lhs) lhs = g;
  }
  const Rational rhs =
      (report.gamma * f(w.x | w.y) - report.alpha * fx) / w.y.size();
  return lhs && *lhs == w.lhs && rhs == w.rhs && *lhs < rhs;
}

RatioWitness WeakSubmodularityRatio(const SetFunction& f, const TiePolicy& tie,
                                    int guard) {
  CheckGuard(f.n(), guard, "weak submodularity ratio");
  const Table t(f);
  RatioWitness result;
  result.ratio = 1;
  result.tie = tie.ToString();
  std::vector<Rational> sums(t.values.size());
  for (Subset x : GreedyChainOf(t, f.ground(), tie)) {
    const Rational& fx = t[x];
    const Subset complement = Subset::Full(f.n()) - x;
    const uint64_t c = complement.mask();
    sums[0] = 0;
    ++result.checked_pairs;  // Y = {} contributes 0/0 := 1
    for (uint64_t sub = (0 - c) & c; sub != 0; sub = (sub - c) & c) {
      const int low = std::countr_zero(sub);
      const uint64_t rest = sub & (sub - 1);
      sums[sub] = sums[rest] + (t[x.with(low)] - fx);
      ++result.checked_pairs;
      const Rational den = t[Subset(sub) | x] - fx;
      Rational ratio;
      if (den == 0) {
        if (sums[sub] != 0) continue;
        ratio = 1;
      } else {
        ratio = sums[sub] / den;
      }
      if (ratio < result.ratio) {
        result.ratio = ratio;
        result.x = x;
        result.y = Subset(sub);
        result.numerator = sums[sub];
        result.denominator = den;
      }
    }
  }
  return result;
}

AuditReport CheckAlphaAugmentable(const SetFunction& f, const Rational& alpha,
                                  const AuditOptions& options) {
  return RunAugmentation(f, Rational(1), alpha, options,
                         Existential::kOutsideX, "alpha_augmentable");
}

AuditReport CheckGammaAlphaAugmentable(const SetFunction& f,
                                       const Rational& gamma,
                                       const Rational& alpha,
                                       const AuditOptions& options) {
  if (gamma <= 0 || gamma > 1) {
    throw ParameterError("gamma must lie in (0, 1], got " + ToString(gamma));
  }
  if (alpha < gamma) {
    throw ParameterError("alpha must be at least gamma, got alpha=" +
                         ToString(alpha) + ", gamma=" + ToString(gamma));
  }
  return RunAugmentation(f, gamma, alpha, options, Existential::kAnyInY,
                         "gamma_alpha_augmentable");
}

ExtendedRational MinAlphaFor(const SetFunction& f, const Rational& gamma,
                             const AuditOptions& options) {
  if (gamma <= 0 || gamma > 1) {
    throw ParameterError("gamma must lie in (0, 1], got " + ToString(gamma));
  }
  CheckGuard(f.n(), GuardFor(options), "min alpha");
  const Table t(f);
  for (const Rational& v : t.values) {
    if (v < 0) throw ParameterError("min alpha requires a nonnegative function");
  }
  const Existential existential =
      options.existential.value_or(Existential::kAnyInY);
  Rational best = gamma;
  bool infinite = false;
  std::vector<uint8_t> argmax(t.values.size());
  std::vector<Rational> gains(f.n());
  for (Subset x : ScopeSets(t, f.ground(), options.scope, options.tie)) {
    const Rational& fx = t[x];
    ForEachOutside(t, x, argmax, gains, [&](Subset y_out, int e) {
      const Rational target = gamma * t[x | y_out];
      Candidate cands[2];
      const int count = Candidates(x, y_out, gains[e], existential, cands);
      for (int i = 0; i < count; ++i) {
        const Rational excess = target - cands[i].best * cands[i].y.size();
        if (fx > 0) {
          Rational needed = excess / fx;
          if (needed > best) best = needed;
        } else if (excess > 0) {
          infinite = true;
          return false;
        }
      }
      return true;
    });
    if (infinite) return ExtendedRational::Infinity();
  }
  return ExtendedRational(best);
}

RankQuotientResult RankQuotient(const IndependenceSystem& sys, int guard) {
  ValidateSystem(sys, guard);
  const std::vector<bool> independent = IndependenceTable(sys, guard);
  const size_t total = independent.size();
  const uint64_t full = Subset::Full(sys.n()).mask();
  std::vector<int8_t> min_size(total, -1);
  std::vector<int8_t> max_size(total, -1);
  std::vector<uint64_t> min_basis(total);
  std::vector<uint64_t> max_basis(total);
  for (uint64_t b = 0; b < total; ++b) {
    if (!independent[b]) continue;
    uint64_t extendable = 0;
    for (int e = 0; e < sys.n(); ++e) {
      const uint64_t bit = uint64_t{1} << e;
      if (!(b & bit) && independent[b | bit]) extendable |= bit;
    }
    // B is a basis of exactly the sets B u Z with Z avoiding B and ext(B).
    const int8_t size = static_cast<int8_t>(std::popcount(b));
    const uint64_t free = full & ~b & ~extendable;
    ForEachSubmask(Subset(free), [&](Subset z) {
      const uint64_t x = b | z.mask();
      if (min_size[x] < 0 || size < min_size[x]) {
        min_size[x] = size;
        min_basis[x] = b;
      }
      if (size > max_size[x]) {
        max_size[x] = size;
        max_basis[x] = b;
      }
    });
  }
  RankQuotientResult result{Rational(1), Subset(), Subset(), Subset()};
  for (uint64_t x = 0; x < total; ++x) {
    if (max_size[x] <= 0) continue;  // 0/0 := 1
    Rational q(min_size[x], max_size[x]);
    q.canonicalize();
    if (q < result.q) {
      result = {q, Subset(x), Subset(min_basis[x]), Subset(max_basis[x])};
    }
  }
  return result;
}

namespace {

BoundReport Certify(const SetFunction& f, const Rational& gamma,
                    const Rational& alpha, const TiePolicy& tie,
                    bool use_cardinality_factor) {
  if (gamma <= 0 || alpha <= 0) {
    throw ParameterError("gamma and alpha must be positive");
  }
  const std::vector<OptimumRecord> optima = OptimaByCardinality(f);
  const GreedyTrace trace = GreedyAdaptive(f, f.n(), tie);
  BoundReport report;
  report.saturation = SaturationCardinality(f, tie);
  const Rational base = gamma / alpha;
  for (int k = 1; k <= f.n(); ++k) {
    BoundRow row;
    row.k = k;
    row.saturated = k > report.saturation;
    row.greedy_value = trace.values[k];
    row.optimum_value = optima[k].best_value;
    if (use_cardinality_factor && !row.saturated) {
      row.factor = base * (1 - Pow(1 - alpha / k, k));
    } else {
      row.factor = base;
    }
    row.slack = row.greedy_value - row.factor * row.optimum_value;
    row.holds = row.slack >= 0;
    report.holds = report.holds && row.holds;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace

BoundReport CertifyGreedyBound(const SetFunction& f, const Rational& gamma,
                               const Rational& alpha, const TiePolicy& tie) {
  return Certify(f, gamma, alpha, tie, true);
}

BoundReport CertifyIndependenceBound(const SetFunction& f,
                                     const Rational& gamma,
                                     const Rational& alpha,
                                     const TiePolicy& tie) {
  return Certify(f, gamma, alpha, tie, false);
}

ExchangeReport CheckExchangeProperty(const IndependenceSystem& sys,
                                  const TiePolicy& tie) {
  const SetFunction f = WeightedRankOracle(sys);
  const GreedyTrace trace = GreedyNonAdaptive(f, f.n(), tie);
  ExchangeReport report;
  for (int k = 1; k <= trace.steps(); ++k) {
    const Subset s = trace.chain[k];
    const Rational fs = trace.values[k];
    for (int x = 0; x < f.n(); ++x) {
      if (s.contains(x) || sys.weights[x] <= 0) continue;
      ++report.checked;
      const bool independent = sys.independent(s.with(x));
      const Rational gain = f(s.with(x)) - fs;
      const bool full_gain = gain == sys.weights[x];
      const bool positive = gain > 0;
      if (independent != full_gain || full_gain != positive) {
        report.holds = false;
        report.violations.push_back({k, x, independent, gain});
      }
    }
  }
  return report;
}

}  // namespace greedy
