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

#include "greedy/greedy.h"

#include <algorithm>
#include <sstream>

#include "greedy/errors.h"

namespace greedy {

int TiePolicy::Choose(const std::vector<int>& tied) const {
  switch (kind) {
    case Kind::kLowestIndex:
      return tied.front();
    case Kind::kHighestIndex:
      return tied.back();
    case Kind::kPriority:
      for (int e : priority) {
        if (std::find(tied.begin(), tied.end(), e) != tied.end()) return e;
      }
      return tied.front();
  }
  return tied.front();
}

std::string TiePolicy::ToString() const {
  switch (kind) {
    case Kind::kLowestIndex:
      return "lowest";
    case Kind::kHighestIndex:
      return "highest";
    case Kind::kPriority: {
      std::string out = "priority:";
      for (size_t i = 0; i < priority.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(priority[i]);
      }
      return out;
    }
  }
  return "lowest";
}

TiePolicy TiePolicy::Parse(const std::string& text, const GroundSet& ground) {
  if (text == "lowest") return Lowest();
  if (text == "highest") return Highest();
  const std::string prefix = "priority:";
  if (text.rfind(prefix, 0) != 0) {
    throw ParseError("unknown tie policy '" + text +
                     "' (expected lowest, highest or priority:e1,e2,...)");
  }
  std::vector<int> order;
  std::stringstream in(text.substr(prefix.size()));
  std::string item;
  while (std::getline(in, item, ',')) {
    int e = ground.Find(item);
    if (e < 0) throw ParseError("unknown element '" + item + "' in tie policy");
    order.push_back(e);
  }
  return Priority(std::move(order));
}

namespace {

void CheckCardinality(const SetFunction& f, int k) {
  if (k < 0 || k > f.n()) {
    throw InvalidCardinality("cardinality " + std::to_string(k) +
                             " outside [0, " + std::to_string(f.n()) + "]");
  }
}

// One greedy step from the last chain entry. Returns false (and leaves the
// trace untouched) if `require_improvement` and no element improves.
bool Step(const SetFunction& f, const TiePolicy& tie, bool require_improvement,
          GreedyTrace& trace) {
  const Subset current = trace.chain.back();
  const Rational& base = trace.values.back();
  std::vector<int> tied;
  Rational best;
  Rational best_value;
  for (int x = 0; x < f.n(); ++x) {
    if (current.contains(x)) continue;
    Rational value = f(current.with(x));
    Rational gain = value - base;
    if (tied.empty() || gain > best) {
      tied.assign(1, x);
      best = gain;
      best_value = value;
    } else if (gain == best) {
      tied.push_back(x);
    }
  }
  if (tied.empty()) return false;
  if (require_improvement && best <= 0) return false;
  const int pick = tie.Choose(tied);
  trace.chain.push_back(current.with(pick));
  trace.picks.push_back(pick);
  trace.gains.push_back(best);
  trace.values.push_back(best_value);
  trace.ties.push_back(std::move(tied));
  return true;
}

GreedyTrace StartTrace(const SetFunction& f) {
  GreedyTrace trace;
  trace.chain.push_back(Subset());
  trace.values.push_back(f(Subset()));
  return trace;
}

}  // namespace

GreedyTrace GreedyAdaptive(const SetFunction& f, int k, const TiePolicy& tie) {
  CheckCardinality(f, k);
  GreedyTrace trace = StartTrace(f);
  for (int i = 0; i < k; ++i) Step(f, tie, false, trace);
  return trace;
}

GreedyTrace GreedyNonAdaptive(const SetFunction& f, int k,
                              const TiePolicy& tie) {
  CheckCardinality(f, k);
  GreedyTrace trace = StartTrace(f);
  for (int i = 0; i < k; ++i) {
    if (!Step(f, tie, true, trace)) break;
  }
  return trace;
}

GreedyTrace RunGreedy(const SetFunction& f, int k, const TiePolicy& tie,
                      GreedyVariant variant) {
  return variant == GreedyVariant::kAdaptive ? GreedyAdaptive(f, k, tie)
                                             : GreedyNonAdaptive(f, k, tie);
}

int SaturationCardinality(const SetFunction& f, const TiePolicy& tie) {
  return GreedyNonAdaptive(f, f.n(), tie).steps();
}

std::vector<OptimumRecord> OptimaByCardinality(const SetFunction& f,
                                               int max_n) {
  if (f.n() > max_n) {
    throw SizeLimitExceeded("optimum enumeration needs n <= " +
                            std::to_string(max_n) + ", got " +
                            std::to_string(f.n()));
  }
  const int n = f.n();
  // Best set of each exact size, then prefix maxima.
  std::vector<std::optional<OptimumRecord>> exact(n + 1);
  const uint64_t total = uint64_t{1} << n;
  for (uint64_t m = 0; m < total; ++m) {
    Subset s(m);
    Rational v = f(s);
    auto& slot = exact[s.size()];
    if (!slot || v > slot->best_value ||
        (v == slot->best_value && LexLess(s, slot->best_set))) {
      slot = OptimumRecord{s.size(), s, v};
    }
  }
  std::vector<OptimumRecord> out(n + 1);
  for (int k = 0; k <= n; ++k) {
    OptimumRecord best = *exact[k];
    if (k > 0) {
      const OptimumRecord& prev = out[k - 1];
      if (prev.best_value > best.best_value ||
          (prev.best_value == best.best_value &&
           LexLess(prev.best_set, best.best_set))) {
        best = prev;
      }
    }
    best.k = k;
    out[k] = best;
  }
  return out;
}

OptimumRecord BruteForceOptimum(const SetFunction& f, int k, int max_n) {
  CheckCardinality(f, k);
  return OptimaByCardinality(f, max_n)[k];
}

RatioResult ApproximationRatio(const SetFunction& f, const TiePolicy& tie,
                               GreedyVariant variant, int max_n) {
  std::vector<OptimumRecord> optima = OptimaByCardinality(f, max_n);
  GreedyTrace full = GreedyAdaptive(f, f.n(), tie);
  const int saturation = SaturationCardinality(f, tie);

  RatioResult result;
  result.ratio = ExtendedRational(Rational(0));
  bool have = false;
  for (int k = 0; k <= f.n(); ++k) {
    int steps = variant == GreedyVariant::kAdaptive ? k : std::min(k, saturation);
    const Rational& g = full.values[steps];
    const Rational& opt = optima[k].best_value;
    result.greedy_values.push_back(g);
    result.optimum_values.push_back(opt);
    if (k == 0) continue;
    ExtendedRational r;
    if (g == 0) {
      r = opt == 0 ? ExtendedRational(Rational(1)) : ExtendedRational::Infinity();
    } else {
      r = ExtendedRational(Rational(opt / g));
    }
    if (!have || r > result.ratio) {
      result.ratio = r;
      result.witness_k = k;
      have = true;
    }
  }
  if (!have) result.ratio = ExtendedRational(Rational(1));
  return result;
}

std::string TraceToCsv(const GreedyTrace& trace, const GroundSet& ground,
                       bool decimals) {
  std::ostringstream out;
  out << "step,pick,label,gain,value,tie_count";
  if (decimals) out << ",gain_decimal,value_decimal";
  out << "\n";
  for (int i = 0; i < trace.steps(); ++i) {
    out << (i + 1) << "," << trace.picks[i] << "," << ground.label(trace.picks[i])
        << "," << ToString(trace.gains[i]) << "," << ToString(trace.values[i + 1])
        << "," << trace.ties[i].size();
    if (decimals) {
      out << "," << ToDecimal(trace.gains[i]) << ","
          << ToDecimal(trace.values[i + 1]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace greedy
