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

#ifndef GREEDY_EXPERIMENTS_H_
#define GREEDY_EXPERIMENTS_H_

#include <optional>
#include <string>
#include <vector>

#include "greedy/audit.h"
#include "greedy/greedy.h"
#include "greedy/instance.h"
#include "greedy/rational.h"
#include "greedy/set_function.h"
#include "json.hpp"

namespace greedy {

// "instance" selects the instance's preferred policy; anything else is
// parsed by TiePolicy::Parse against the instance's ground set.
TiePolicy ResolveTie(const Instance& instance, const std::string& text);

// Greedy trace as CSV. Instances with symbolic capacity offsets run the
// perturbed greedy and print values as "base+coef e".
std::string RunTrace(const Instance& instance, int k, const TiePolicy& tie,
                     bool decimals = false);

struct AuditBundleOptions {
  Scope scope = Scope::kWeak;
  std::optional<TiePolicy> tie;  // unset: the instance's preferred policy
  std::vector<Rational> alphas;  // empty: 1, 3/2, 2, 4
  std::vector<Rational> gammas;  // empty: 1 and the measured weak ratio
};

// Runs the weak ratio, alpha-augmentability at every alpha, gamma-alpha
// augmentability at every admissible (gamma, alpha) plus (g, g) for the
// weak ratio g, the smallest alpha per gamma and, when the instance has an
// independence system, the rank quotient. A failing audit records its error
// and the others still run.
nlohmann::json RunAudit(const Instance& instance,
                        const AuditBundleOptions& options);

// Families with a closed-form ratio: "critical" (k is the family
// parameter of F) and "lower_bound_flow" (k is the parameter of G_k).
struct RatioTableSpec {
  std::string family = "critical";
  std::vector<Rational> gammas = {Rational(1)};
  std::vector<Rational> alphas = {Rational(1)};
  std::vector<int> ks;
  TiePolicy tie;
  double tolerance = 1e-2;
  // Largest ground set measured by brute force; unset: 16 for the critical
  // family and 8 sinks for flows.
  std::optional<int> max_measured_n;
};

// Throws ParameterError listing every infeasible grid point.
void ValidateGrid(const RatioTableSpec& spec);

// (alpha/gamma) e^alpha / (e^alpha - 1) in floating point.
double LimitRatio(const Rational& gamma, const Rational& alpha);

inline constexpr char kRatioTableHeader[] =
    "family,gamma,alpha,k,measured,witness_k,closed_form,"
    "closed_form_decimal,limit,gap,converging,near_limit";

// One row per grid point in (gamma, alpha, k) order. Validates first.
std::string RunRatioTable(const RatioTableSpec& spec);

// gnuplot script plotting closed form and limit against k from `csv_path`.
std::string GnuplotScript(const std::string& csv_path);

struct PickOrderWitness {
  int step = 0;  // 1-based
  int expected = 0;
  int actual = -1;  // -1: greedy stopped early
};

// First step where adaptive greedy deviates from `expected`, if any.
std::optional<PickOrderWitness> CheckPickOrder(const SetFunction& f,
                                               const std::vector<int>& expected,
                                               const TiePolicy& tie);

struct CheckResult {
  std::string id;
  bool pass = false;
  nlohmann::json detail;
};

// On every instance: alpha-augmentable implies weakly 1-alpha augmentable;
// weak ratio g > 0 implies weakly g-g augmentable; rank quotient q implies
// weakly gamma-(gamma/q) augmentable for gamma in {1/2, 1}.
CheckResult ContainmentCheck(const std::vector<Instance>& corpus);

// Identifiers of the built-in check matrix, in run order.
const std::vector<std::string>& VerifyCheckIds();

// Runs the checks whose id is listed in `filter` (unset: all). Unknown ids
// throw ParameterError.
std::vector<CheckResult> RunVerify(
    const std::optional<std::vector<std::string>>& filter = std::nullopt);

nlohmann::json ToJson(const std::vector<CheckResult>& results);

}  // namespace greedy

#endif  // GREEDY_EXPERIMENTS_H_
