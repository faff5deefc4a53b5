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

#include "greedy/set_function.h"

#include <mutex>
#include <unordered_map>

#include "greedy/errors.h"

namespace greedy {

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1 || n > kMaxGroundSize) {
    throw ParameterError("ground set size must be in [1, 64], got " +
                         std::to_string(n));
  }
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw ParameterError("label count does not match ground set size");
  }
}

std::string GroundSet::label(int e) const {
  return labels_.empty() ? std::to_string(e) : labels_[e];
}

int GroundSet::Find(const std::string& label) const {
  for (int e = 0; e < n_; ++e) {
    if (this->label(e) == label) return e;
  }
  for (int e = 0; e < n_; ++e) {
    if (std::to_string(e) == label) return e;
  }
  return -1;
}

SetFunction::SetFunction(GroundSet ground, Evaluator eval)
    : ground_(std::move(ground)),
      eval_(std::make_shared<const Evaluator>(std::move(eval))) {}

SetFunction Tabulate(const SetFunction& f, int max_n) {
  if (f.n() > max_n) {
    throw SizeLimitExceeded("tabulation needs n <= " + std::to_string(max_n) +
                            ", got " + std::to_string(f.n()));
  }
  auto table = std::make_shared<std::vector<Rational>>(size_t{1} << f.n());
  for (uint64_t m = 0; m < table->size(); ++m) (*table)[m] = f(Subset(m));
  return SetFunction(f.ground(), [table](Subset s) -> Rational {
    return (*table)[s.mask()];
  });
}

SetFunction Memoize(const SetFunction& f) {
  struct Cache {
    std::mutex mu;
    std::unordered_map<uint64_t, Rational> values;
  };
  auto cache = std::make_shared<Cache>();
  return SetFunction(f.ground(), [f, cache](Subset s) -> Rational {
    {
      std::lock_guard<std::mutex> lock(cache->mu);
      auto it = cache->values.find(s.mask());
      if (it != cache->values.end()) return it->second;
    }
    Rational v = f(s);
    std::lock_guard<std::mutex> lock(cache->mu);
    cache->values.emplace(s.mask(), v);
    return v;
  });
}

}  // namespace greedy
