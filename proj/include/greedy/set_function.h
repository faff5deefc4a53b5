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

#ifndef GREEDY_SET_FUNCTION_H_
#define GREEDY_SET_FUNCTION_H_

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "greedy/rational.h"
#include "greedy/subset.h"

namespace greedy {

// A finite ground set {0, ..., n-1} with optional display labels.
class GroundSet {
 public:
  explicit GroundSet(int n, std::vector<std::string> labels = {});

  int size() const { return n_; }
  Subset full() const { return Subset::Full(n_); }
  // Display name of element `e`; the decimal index when unlabeled.
  std::string label(int e) const;
  const std::vector<std::string>& labels() const { return labels_; }
  // Index of the element with the given label (or decimal index), or -1.
  int Find(const std::string& label) const;

 private:
  int n_;
  std::vector<std::string> labels_;
};

// A deterministic value oracle f: 2^U -> Q. Monotonicity and nonnegativity
// are audited, not assumed. Copies share the underlying evaluator.
class SetFunction {
 public:
  using Evaluator = std::function<Rational(Subset)>;

  SetFunction(GroundSet ground, Evaluator eval);

  const GroundSet& ground() const { return ground_; }
  int n() const { return ground_.size(); }

  Rational operator()(Subset s) const { return (*eval_)(s); }
  Rational Gain(Subset s, int e) const {
    return (*this)(s.with(e)) - (*this)(s);
  }

 private:
  GroundSet ground_;
  std::shared_ptr<const Evaluator> eval_;
};

// Evaluates `f` once on every subset and returns a table-backed copy.
// Throws SizeLimitExceeded when n > max_n.
SetFunction Tabulate(const SetFunction& f, int max_n = 20);

// Returns a copy that caches values on first use (thread-safe).
SetFunction Memoize(const SetFunction& f);

}  // namespace greedy

#endif  // GREEDY_SET_FUNCTION_H_
