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

#ifndef GREEDY_FAMILIES_H_
#define GREEDY_FAMILIES_H_

#include <vector>

#include "greedy/greedy.h"
#include "greedy/independence.h"
#include "greedy/rational.h"
#include "greedy/set_function.h"

namespace greedy {

// Parameters of the critical function F_{gamma,alpha,k} on U = A u B with
// A = {a_1..a_k} (indices 0..k-1) and B = {b_1..b_k} (indices k..2k-1).
struct CriticalFunctionParams {
  Rational gamma = 1;
  Rational alpha = 1;
  int k = 2;

  // Throws ParameterError unless 0 < gamma <= 1, alpha >= gamma, k >= 2
  // and k >= alpha.
  void ValidateParameters() const;
  // ValidateParameters, plus 2k <= 64 so that the ground set is representable.
  void Validate() const;

  // xi_i = (1/k) ((k - alpha)/k)^(i-1), for i in 1..k.
  Rational Xi(int i) const;
  // h(x) = ((1/gamma - 1)/(k-1)) x^2 + ((k - 1/gamma)/(k-1)) x.
  Rational H(const Rational& x) const;
};

// The value of the inner objective at a single X':
// (h(|{b_1} n X'| |B n X'|)/k) (1 - alpha s) + s, with s the sum of xi_i
// over a_i in X'.
Rational CriticalInnerObjective(const CriticalFunctionParams& p, Subset x);

// F(X) = max over X' subset of X of the inner objective. The objective is
// nondecreasing in the B part and affine in s, so the maximum is attained
// with all of B n X (if b_1 is present) and with A n X either fully in or
// fully out.
SetFunction MakeCriticalFunction(const CriticalFunctionParams& p);

// Same function, evaluated by an explicit max over all X' subset of X.
SetFunction MakeCriticalFunctionExhaustive(const CriticalFunctionParams& p);

// (alpha/gamma) / (1 - (1 - alpha/k)^k); any k >= max(2, alpha).
Rational CriticalClosedFormRatio(const CriticalFunctionParams& p);

// Two elements a, b: |X| if |X| <= 1, else 2/gamma. Requires 0 < gamma < 1.
SetFunction MakeFGamma(const Rational& gamma);

struct FQFamily {
  IndependenceSystem system;
  SetFunction objective;
  // Realizes the intended greedy chain: c, then B, then A.
  TiePolicy preferred_tie;
};

// Ground set A (ceil(alpha) n elements), B (same size), then c. Independent
// sets: subsets of A, subsets of B, and all sets of size <= ceil(alpha) m.
// Weights 1 on A and ceil(alpha)(n - m) + 1 elsewhere. Requires integers
// m, n >= 1 with q <= m/n < 1 and alpha >= 1.
FQFamily MakeFQ(const Rational& q, const Rational& alpha, int m, int n);

// f(X) = |X|^2.
SetFunction MakeSquareCardinality(int n);

// f(X) = sum of weights over X.
SetFunction MakeModular(std::vector<Rational> weights);

}  // namespace greedy

#endif  // GREEDY_FAMILIES_H_
