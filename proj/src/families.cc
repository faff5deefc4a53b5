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

#include "greedy/families.h"

#include <memory>
#include <string>

#include "greedy/errors.h"

namespace greedy {

void CriticalFunctionParams::ValidateParameters() const {
  if (gamma <= 0 || gamma > 1) {
    throw ParameterError("critical function: gamma must lie in (0, 1], got " +
                         ToString(gamma));
  }
  if (alpha < gamma) {
    throw ParameterError("critical function: alpha must be >= gamma");
  }
  if (k < 2) {
    throw ParameterError("critical function: k must be >= 2, got " +
                         std::to_string(k));
  }
  if (alpha > k) {
    throw ParameterError("critical function: k must be >= alpha");
  }
}

void CriticalFunctionParams::Validate() const {
  ValidateParameters();
  if (2 * k > kMaxGroundSize) {
    throw ParameterError("critical function: k must lie in [2, 32], got " +
                         std::to_string(k));
  }
}

Rational CriticalFunctionParams::Xi(int i) const {
  return Rational(Pow((k - alpha) / k, i - 1) / k);
}

Rational CriticalFunctionParams::H(const Rational& x) const {
  const Rational inv = 1 / gamma;
  return Rational(((inv - 1) * x * x + (k - inv) * x) / (k - 1));
}

namespace {

struct CriticalTables {
  explicit CriticalTables(const CriticalFunctionParams& p) : params(p) {
    for (int i = 1; i <= p.k; ++i) xi.push_back(p.Xi(i));
    for (int m = 0; m <= p.k; ++m) h_over_k.push_back(Rational(p.H(m) / p.k));
  }

  Rational Inner(Subset x) const {
    const int k = params.k;
    const Subset a_part = x & Subset::Full(k);
    const Subset b_part = x - Subset::Full(k);
    Rational s = 0;
    for (int i : a_part.elements()) s += xi[i];
    const int m = b_part.contains(k) ? b_part.size() : 0;
    return Rational(h_over_k[m] * (1 - params.alpha * s) + s);
  }

  CriticalFunctionParams params;
  std::vector<Rational> xi;        // xi[i-1] = xi_i
  std::vector<Rational> h_over_k;  // h(m)/k
};

GroundSet CriticalGround(int k) {
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back("a" + std::to_string(i));
  for (int i = 1; i <= k; ++i) labels.push_back("b" + std::to_string(i));
  return GroundSet(2 * k, std::move(labels));
}

}  // namespace

Rational CriticalInnerObjective(const CriticalFunctionParams& p, Subset x) {
  p.Validate();
  return CriticalTables(p).Inner(x);
}

SetFunction MakeCriticalFunction(const CriticalFunctionParams& p) {
  p.Validate();
  auto tables = std::make_shared<const CriticalTables>(p);
  const int k = p.k;
  return SetFunction(CriticalGround(k), [tables, k](Subset x) -> Rational {
    const Subset a_part = x & Subset::Full(k);
    const Subset b_part = x.contains(k) ? x - Subset::Full(k) : Subset();
    Rational best = tables->Inner(a_part | b_part);
    Rational v = tables->Inner(b_part);
    if (v > best) best = v;
    v = tables->Inner(a_part);
    if (v > best) best = v;
    return best;
  });
}

SetFunction MakeCriticalFunctionExhaustive(const CriticalFunctionParams& p) {
  p.Validate();
  auto tables = std::make_shared<const CriticalTables>(p);
  return SetFunction(CriticalGround(p.k), [tables](Subset x) -> Rational {
    Rational best = tables->Inner(Subset());
    ForEachSubmask(x, [&](Subset sub) {
      Rational v = tables->Inner(sub);
      if (v > best) best = v;
    });
    return best;
  });
}

Rational CriticalClosedFormRatio(const CriticalFunctionParams& p) {
  p.ValidateParameters();
  const Rational one_minus = Pow(1 - p.alpha / p.k, p.k);
  return Rational((p.alpha / p.gamma) / (1 - one_minus));
}

SetFunction MakeFGamma(const Rational& gamma) {
  if (gamma <= 0 || gamma >= 1) {
    throw ParameterError("f^gamma requires 0 < gamma < 1, got " +
                         ToString(gamma));
  }
  const Rational top = 2 / gamma;
  return SetFunction(GroundSet(2, {"a", "b"}), [top](Subset x) -> Rational {
    return x.size() <= 1 ? Rational(x.size()) : top;
  });
}

FQFamily MakeFQ(const Rational& q, const Rational& alpha, int m, int n) {
  if (m < 1 || n < 1) throw ParameterError("f^q requires m, n >= 1");
  const Rational ratio(m, n);
  if (q <= 0 || q >= 1) throw ParameterError("f^q requires 0 < q < 1");
  if (q > ratio || ratio >= 1) {
    throw ParameterError("f^q requires q <= m/n < 1, got q=" + ToString(q) +
                         ", m/n=" + ToString(Rational(ratio)));
  }
  if (alpha < 1) throw ParameterError("f^q requires alpha >= 1");
  mpz_class ceil_alpha;
  mpz_cdiv_q(ceil_alpha.get_mpz_t(), alpha.get_num_mpz_t(),
             alpha.get_den_mpz_t());
  const long ca = ceil_alpha.get_si();
  const long block = ca * n;
  const int size = static_cast<int>(2 * block + 1);
  if (block > 31) throw ParameterError("f^q ground set exceeds 64 elements");

  std::vector<std::string> labels;
  for (long i = 1; i <= block; ++i) labels.push_back("a" + std::to_string(i));
  for (long i = 1; i <= block; ++i) labels.push_back("b" + std::to_string(i));
  labels.push_back("c");

  const Subset a_set = Subset::Full(static_cast<int>(block));
  const Subset b_set = Subset::Full(static_cast<int>(2 * block)) - a_set;
  const long small = ca * m;
  const Rational heavy = ca * (n - m) + 1;
  std::vector<Rational> weights(size, heavy);
  for (long i = 0; i < block; ++i) weights[i] = 1;

  IndependenceSystem sys{GroundSet(size, labels),
                         [a_set, b_set, small](Subset x) {
                           return x.is_subset_of(a_set) ||
                                  x.is_subset_of(b_set) || x.size() <= small;
                         },
                         weights};
  std::vector<int> order;
  order.push_back(size - 1);
  for (int e : b_set.elements()) order.push_back(e);
  for (int e : a_set.elements()) order.push_back(e);
  SetFunction objective = WeightedRankOracle(sys, 20);
  return {std::move(sys), std::move(objective),
          TiePolicy::Priority(std::move(order))};
}

SetFunction MakeSquareCardinality(int n) {
  return SetFunction(GroundSet(n),
                     [](Subset x) { return Rational(x.size() * x.size()); });
}

SetFunction MakeModular(std::vector<Rational> weights) {
  const int n = static_cast<int>(weights.size());
  auto w = std::make_shared<const std::vector<Rational>>(std::move(weights));
  return SetFunction(GroundSet(n), [w](Subset x) {
    Rational total = 0;
    for (int e : x.elements()) total += (*w)[e];
    return total;
  });
}

}  // namespace greedy
