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

#ifndef GREEDY_AUDIT_H_
#define GREEDY_AUDIT_H_

#include <optional>
#include <string>
#include <vector>

#include "greedy/greedy.h"
#include "greedy/independence.h"
#include "greedy/rational.h"
#include "greedy/set_function.h"
#include "greedy/subset.h"
#include "json.hpp"

namespace greedy {

// Which sets X an augmentability audit ranges over: the greedy chain
// S_0..S_kbar (weak) or all of 2^U (strong).
enum class Scope { kWeak, kStrong };

// Where the existential element y of an augmentability check is drawn from.
enum class Existential { kOutsideX, kAnyInY };

std::string ToString(Scope scope);
std::string ToString(Existential existential);

inline constexpr int kStrongGuard = 16;
inline constexpr int kWeakGuard = 20;

struct AuditOptions {
  Scope scope = Scope::kWeak;
  // Unset: the convention of the audited definition.
  std::optional<Existential> existential;
  TiePolicy tie;
  int strong_guard = kStrongGuard;
  int weak_guard = kWeakGuard;
};

struct AuditWitness {
  Subset x;
  Subset y;
  Rational lhs;  // best available single-element gain
  Rational rhs;  // (gamma f(X u Y) - alpha f(X)) / |Y|
};

struct AuditReport {
  std::string audit;
  bool member = true;
  Rational gamma = 1;
  Rational alpha = 1;
  Scope scope = Scope::kWeak;
  Existential existential = Existential::kOutsideX;
  std::string tie;
  std::optional<AuditWitness> witness;
  long long checked_pairs = 0;
};

nlohmann::json ToJson(const AuditReport& report, const GroundSet& ground);

// Re-evaluates a non-member witness with direct oracle calls. True iff the
// recorded lhs/rhs are reproduced and lhs < rhs.
bool VerifyWitness(const SetFunction& f, const AuditReport& report);

struct RatioWitness {
  Rational ratio;
  Subset x;
  Subset y;
  Rational numerator;    // sum of singleton gains of Y at X
  Rational denominator;  // f(X u Y) - f(X)
  long long checked_pairs = 0;
  std::string tie;
};

// Minimum over X on the greedy chain S_0..S_kbar and Y subset of U\X of
// sum_y gain(X, y) / (f(X u Y) - f(X)), with 0/0 := 1; pairs with a positive
// numerator over a zero denominator are excluded.
RatioWitness WeakSubmodularityRatio(const SetFunction& f, const TiePolicy& tie,
                                    int guard = kWeakGuard);

// For every in-scope X and Y not contained in X, some y in Y\X (default)
// satisfies gain(X, y) >= (f(X u Y) - alpha f(X)) / |Y|.
AuditReport CheckAlphaAugmentable(const SetFunction& f, const Rational& alpha,
                                  const AuditOptions& options);

// For every in-scope X and Y not contained in X, some y in Y (default)
// satisfies gain(X, y) >= (gamma f(X u Y) - alpha f(X)) / |Y|.
// Requires 0 < gamma <= 1 and alpha >= gamma.
AuditReport CheckGammaAlphaAugmentable(const SetFunction& f,
                                       const Rational& gamma,
                                       const Rational& alpha,
                                       const AuditOptions& options);

// Least alpha >= gamma for which CheckGammaAlphaAugmentable passes; +inf if
// no finite alpha works. Requires f >= 0.
ExtendedRational MinAlphaFor(const SetFunction& f, const Rational& gamma,
                             const AuditOptions& options);

struct RankQuotientResult {
  Rational q;
  Subset x;
  Subset smallest_basis;
  Subset largest_basis;
};

// min over X of |B| / |B'| for bases B, B' of X, with 0/0 := 1.
RankQuotientResult RankQuotient(const IndependenceSystem& sys,
                                int guard = kIndependenceGuard);

struct BoundRow {
  int k = 0;
  bool saturated = false;  // k > kbar
  Rational greedy_value;
  Rational optimum_value;
  Rational factor;  // (gamma/alpha)(1-(1-alpha/k)^k), or gamma/alpha
  Rational slack;   // greedy_value - factor * optimum_value
  bool holds = true;
};

struct BoundReport {
  bool holds = true;
  int saturation = 0;
  std::vector<BoundRow> rows;
};

// Per-k check of f(S^G_k) >= (gamma/alpha)(1-(1-alpha/k)^k) f(S*_k) for
// k <= kbar and f(S^G_k) >= (gamma/alpha) f(S*_k) beyond.
BoundReport CertifyGreedyBound(const SetFunction& f, const Rational& gamma,
                               const Rational& alpha, const TiePolicy& tie);

// Per-k check of the plain factor (gamma/alpha) for every k.
BoundReport CertifyIndependenceBound(const SetFunction& f,
                                     const Rational& gamma,
                                     const Rational& alpha,
                                     const TiePolicy& tie);

struct ExchangeViolation {
  int k = 0;
  int element = 0;
  bool independent = false;
  Rational gain;
};

struct ExchangeReport {
  bool holds = true;
  long long checked = 0;
  std::vector<ExchangeViolation> violations;
};

// On the weighted rank of `sys`, for k in 1..kbar and every x outside S^G_k
// with w(x) > 0: S^G_k + x independent <=> gain = w(x) <=> gain > 0.
ExchangeReport CheckExchangeProperty(const IndependenceSystem& sys,
                                  const TiePolicy& tie);

}  // namespace greedy

#endif  // GREEDY_AUDIT_H_
