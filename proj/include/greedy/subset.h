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

#ifndef GREEDY_SUBSET_H_
#define GREEDY_SUBSET_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace greedy {

// Maximum ground-set size representable by a Subset.
inline constexpr int kMaxGroundSize = 64;

// A subset of a ground set {0, ..., n-1}, stored as a bit mask.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(uint64_t mask) : mask_(mask) {}
  Subset(std::initializer_list<int> elements) {
    for (int e : elements) mask_ |= Bit(e);
  }

  static Subset FromElements(const std::vector<int>& elements) {
    Subset s;
    for (int e : elements) s.mask_ |= Bit(e);
    return s;
  }
  // {0, ..., n-1}.
  static constexpr Subset Full(int n) {
    return Subset(n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1);
  }

  constexpr uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool contains(int e) const { return (mask_ >> e) & 1U; }
  constexpr Subset with(int e) const { return Subset(mask_ | Bit(e)); }
  constexpr Subset without(int e) const { return Subset(mask_ & ~Bit(e)); }
  constexpr bool is_subset_of(Subset other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  // Smallest element; precondition !empty().
  constexpr int lowest() const { return std::countr_zero(mask_); }

  // Elements in ascending order.
  std::vector<int> elements() const;

  // "{0,2,5}".
  std::string ToString() const;

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.mask_ | b.mask_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.mask_ & b.mask_);
  }
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.mask_ & ~b.mask_);
  }
  friend constexpr bool operator==(Subset a, Subset b) = default;

 private:
  static constexpr uint64_t Bit(int e) { return uint64_t{1} << e; }
  uint64_t mask_ = 0;
};

// Lexicographic order on sorted element lists ({0,5} < {1}; {0} < {0,1}).
bool LexLess(Subset a, Subset b);

// Calls fn(sub) for every subset of `s`, including the empty set and `s`
// itself, in increasing mask order.
template <typename Fn>
void ForEachSubmask(Subset s, Fn&& fn) {
  const uint64_t m = s.mask();
  uint64_t sub = 0;
  while (true) {
    fn(Subset(sub));
    if (sub == m) break;
    sub = (sub - m) & m;
  }
}

}  // namespace greedy

#endif  // GREEDY_SUBSET_H_
