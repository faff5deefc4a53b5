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

#include "greedy/independence.h"

#include <memory>

#include "greedy/errors.h"

namespace greedy {

Rational IndependenceSystem::Weight(Subset s) const {
  Rational total = 0;
  for (int e : s.elements()) total += weights[e];
  return total;
}

IndependenceSystem IndependenceSystem::FromGenerators(
    GroundSet ground, std::vector<Subset> generators,
    std::vector<Rational> weights) {
  auto gens = std::make_shared<const std::vector<Subset>>(std::move(generators));
  return {std::move(ground),
          [gens](Subset s) {
            if (s.empty()) return true;
            for (Subset g : *gens) {
              if (s.is_subset_of(g)) return true;
            }
            return false;
          },
          std::move(weights)};
}

IndependenceSystem IndependenceSystem::Free(GroundSet ground,
                                            std::vector<Rational> weights) {
  return {std::move(ground), [](Subset) { return true; }, std::move(weights)};
}

IndependenceSystem IndependenceSystem::Uniform(GroundSet ground, int rank,
                                               std::vector<Rational> weights) {
  return {std::move(ground), [rank](Subset s) { return s.size() <= rank; },
          std::move(weights)};
}

std::vector<bool> IndependenceTable(const IndependenceSystem& sys, int max_n) {
  if (sys.n() > max_n) {
    throw SizeLimitExceeded("independence enumeration needs n <= " +
                            std::to_string(max_n) + ", got " +
                            std::to_string(sys.n()));
  }
  std::vector<bool> table(size_t{1} << sys.n());
  for (uint64_t m = 0; m < table.size(); ++m) table[m] = sys.independent(Subset(m));
  return table;
}

void ValidateSystem(const IndependenceSystem& sys, int max_n) {
  if (static_cast<int>(sys.weights.size()) != sys.n()) {
    throw MalformedSystem("weight count does not match ground set size");
  }
  for (int e = 0; e < sys.n(); ++e) {
    if (sys.weights[e] < 0) {
      throw MalformedSystem("negative weight on element " + sys.ground.label(e));
    }
  }
  std::vector<bool> table = IndependenceTable(sys, max_n);
  if (!table[0]) throw MalformedSystem("the empty set is not independent");
  for (uint64_t m = 1; m < table.size(); ++m) {
    if (!table[m]) continue;
    Subset s(m);
    for (int e : s.elements()) {
      if (!table[s.without(e).mask()]) {
        throw MalformedSystem("independent set " + s.ToString() +
                              " has dependent subset " +
                              s.without(e).ToString());
      }
    }
  }
}

SetFunction WeightedRankOracle(const IndependenceSystem& sys, int max_n) {
  ValidateSystem(sys, max_n);
  std::vector<bool> independent = IndependenceTable(sys, max_n);
  auto rank = std::make_shared<std::vector<Rational>>(independent.size());
  for (uint64_t m = 0; m < rank->size(); ++m) {
    Subset s(m);
    if (independent[m]) {
      (*rank)[m] = sys.Weight(s);
      continue;
    }
    // A dependent set's best independent subset misses some element.
    Rational best = 0;
    for (int e : s.elements()) {
      const Rational& r = (*rank)[s.without(e).mask()];
      if (r > best) best = r;
    }
    (*rank)[m] = best;
  }
  return SetFunction(sys.ground,
                     [rank](Subset s) -> Rational { return (*rank)[s.mask()]; });
}

}  // namespace greedy
