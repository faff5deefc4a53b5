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

#include <gtest/gtest.h>

#include <random>

#include "greedy/errors.h"
#include "greedy/families.h"
#include "greedy/greedy.h"
#include "greedy/independence.h"
#include "support/reference.h"

namespace greedy {
namespace {

SetFunction CriticalF(int gamma_num, int gamma_den, int alpha, int k) {
  return MakeCriticalFunction(
      {MakeRational(gamma_num, gamma_den), MakeRational(alpha), k});
}

TEST(GreedyAdaptiveTest, CriticalFunctionPicksAFirst) {
  const SetFunction f = CriticalF(1, 1, 1, 2);
  const GreedyTrace t = GreedyAdaptive(f, 2, TiePolicy::Lowest());
  EXPECT_EQ(t.picks, (std::vector<int>{0, 1}));
  EXPECT_EQ(f.ground().label(t.picks[1]), "a2");
  EXPECT_EQ(t.gains, (std::vector<Rational>{MakeRational(1, 2), MakeRational(1, 4)}));
  EXPECT_EQ(t.final_value(), MakeRational(3, 4));
  EXPECT_EQ(t.chain.size(), 3u);
}

TEST(GreedyAdaptiveTest, ZeroCardinalityIsEmpty) {
  const SetFunction f = MakeSquareCardinality(3);
  const GreedyTrace t = GreedyAdaptive(f, 0, TiePolicy::Lowest());
  EXPECT_EQ(t.steps(), 0);
  EXPECT_EQ(t.chain, (std::vector<Subset>{Subset()}));
  EXPECT_EQ(t.final_value(), 0);
}

TEST(GreedyAdaptiveTest, ModularSortsByWeight) {
  const IndependenceSystem sys = IndependenceSystem::Free(
      GroundSet(3), {MakeRational(3), MakeRational(1), MakeRational(2)});
  const GreedyTrace t =
      GreedyAdaptive(WeightedRankOracle(sys), 2, TiePolicy::Lowest());
  EXPECT_EQ(t.picks, (std::vector<int>{0, 2}));
  EXPECT_EQ(t.values, (std::vector<Rational>{0, 3, 5}));
}

TEST(GreedyAdaptiveTest, RejectsBadCardinality) {
  const SetFunction f = MakeSquareCardinality(3);
  EXPECT_THROW(GreedyAdaptive(f, 4, TiePolicy::Lowest()), InvalidCardinality);
  EXPECT_THROW(GreedyAdaptive(f, -1, TiePolicy::Lowest()), InvalidCardinality);
  EXPECT_THROW(GreedyNonAdaptive(f, 4, TiePolicy::Lowest()), InvalidCardinality);
}

TEST(GreedyAdaptiveTest, TiePoliciesAndTieLog) {
  const SetFunction f = MakeSquareCardinality(3);
  const GreedyTrace low = GreedyAdaptive(f, 3, TiePolicy::Lowest());
  EXPECT_EQ(low.picks, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(low.ties[0], (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(low.ties[2], (std::vector<int>{2}));
  const GreedyTrace high = GreedyAdaptive(f, 3, TiePolicy::Highest());
  EXPECT_EQ(high.picks, (std::vector<int>{2, 1, 0}));
  const GreedyTrace prio = GreedyAdaptive(f, 3, TiePolicy::Priority({1, 2}));
  EXPECT_EQ(prio.picks, (std::vector<int>{1, 2, 0}));
}

TEST(TiePolicyTest, ParsesNamesAndLabels) {
  GroundSet g(3, {"x", "y", "z"});
  EXPECT_EQ(TiePolicy::Parse("lowest", g).kind, TiePolicy::Kind::kLowestIndex);
  EXPECT_EQ(TiePolicy::Parse("highest", g).kind, TiePolicy::Kind::kHighestIndex);
  TiePolicy p = TiePolicy::Parse("priority:z,0", g);
  EXPECT_EQ(p.priority, (std::vector<int>{2, 0}));
  EXPECT_EQ(p.ToString(), "priority:2,0");
  EXPECT_THROW(TiePolicy::Parse("random", g), ParseError);
  EXPECT_THROW(TiePolicy::Parse("priority:w", g), ParseError);
}

TEST(GreedyNonAdaptiveTest, StopsAtSaturation) {
  SetFunction f(GroundSet(3), [](Subset s) { return Rational(s.empty() ? 0 : 1); });
  const GreedyTrace t = GreedyNonAdaptive(f, 3, TiePolicy::Lowest());
  EXPECT_EQ(t.steps(), 1);
  EXPECT_EQ(SaturationCardinality(f, TiePolicy::Lowest()), 1);
}

TEST(GreedyNonAdaptiveTest, MatchesAdaptiveWhileGainsArePositive) {
  const SetFunction f = CriticalF(1, 1, 1, 2);
  const GreedyTrace a = GreedyAdaptive(f, 4, TiePolicy::Lowest());
  const GreedyTrace b = GreedyNonAdaptive(f, 4, TiePolicy::Lowest());
  EXPECT_EQ(a.picks, b.picks);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(b.steps(), 4);
  for (const Rational& g : a.gains) EXPECT_GT(g, 0);
}

TEST(SaturationTest, Examples) {
  SetFunction card(GroundSet(5), [](Subset s) { return Rational(s.size()); });
  EXPECT_EQ(SaturationCardinality(card, TiePolicy::Lowest()), 5);
  EXPECT_EQ(SaturationCardinality(CriticalF(1, 1, 1, 2), TiePolicy::Lowest()), 4);
}

TEST(BruteForceOptimumTest, CriticalFunctionPrefersB) {
  const SetFunction f = CriticalF(1, 1, 1, 2);
  const OptimumRecord r = BruteForceOptimum(f, 2);
  EXPECT_EQ(r.best_set, (Subset{2, 3}));
  EXPECT_EQ(r.best_value, 1);
  EXPECT_EQ(r.k, 2);
}

TEST(BruteForceOptimumTest, FullCardinalityOnMonotoneIsGround) {
  const SetFunction f = CriticalF(1, 2, 1, 3);
  EXPECT_EQ(BruteForceOptimum(f, 6).best_set, Subset::Full(6));
}

TEST(BruteForceOptimumTest, TiesGoToLexicographicallySmallest) {
  SetFunction f(GroundSet(4), [](Subset s) {
    return Rational(s.contains(0) || s.contains(3) ? 1 : 0);
  });
  EXPECT_EQ(BruteForceOptimum(f, 2).best_set, (Subset{0}));
  SetFunction g(GroundSet(3), [](Subset s) { return Rational(std::min(s.size(), 1)); });
  EXPECT_EQ(BruteForceOptimum(g, 3).best_set, (Subset{0}));
}

TEST(BruteForceOptimumTest, Guards) {
  SetFunction big(GroundSet(25), [](Subset) { return Rational(0); });
  EXPECT_THROW(BruteForceOptimum(big, 1), SizeLimitExceeded);
  EXPECT_THROW(BruteForceOptimum(MakeSquareCardinality(3), 4), InvalidCardinality);
}

TEST(ApproximationRatioTest, CriticalFunction) {
  const RatioResult r = ApproximationRatio(CriticalF(1, 1, 1, 2), TiePolicy::Lowest());
  EXPECT_EQ(r.ratio, ExtendedRational(MakeRational(4, 3)));
  EXPECT_EQ(r.witness_k, 2);
}

TEST(ApproximationRatioTest, ModularIsOne) {
  const RatioResult r = ApproximationRatio(
      MakeModular({MakeRational(2), MakeRational(1, 3), MakeRational(5)}),
      TiePolicy::Lowest());
  EXPECT_EQ(r.ratio, ExtendedRational(1));
}

TEST(ApproximationRatioTest, ZeroGreedyValueIsInfinite) {
  SetFunction f(GroundSet(2), [](Subset s) { return Rational(s.size() == 1 ? 1 : 0); });
  const RatioResult r = ApproximationRatio(f, TiePolicy::Lowest());
  EXPECT_TRUE(r.ratio.is_infinite());
  EXPECT_EQ(r.witness_k, 2);
}

TEST(ApproximationRatioTest, ZeroOverZeroIsOne) {
  SetFunction f(GroundSet(3), [](Subset) { return Rational(0); });
  const RatioResult r = ApproximationRatio(f, TiePolicy::Lowest());
  EXPECT_EQ(r.ratio, ExtendedRational(1));
  EXPECT_EQ(r.witness_k, 1);
}

TEST(ApproximationRatioTest, NonAdaptiveUsesTruncatedChain) {
  // Gains vanish after one pick, then recover; the non-adaptive variant
  // keeps S_1 for every k.
  SetFunction f(GroundSet(3), [](Subset s) {
    return Rational(s.size() <= 1 ? s.size() : (s.size() == 2 ? 1 : 4));
  });
  const RatioResult adaptive = ApproximationRatio(f, TiePolicy::Lowest());
  const RatioResult lazy =
      ApproximationRatio(f, TiePolicy::Lowest(), GreedyVariant::kNonAdaptive);
  EXPECT_EQ(adaptive.ratio, ExtendedRational(1));
  EXPECT_EQ(lazy.ratio, ExtendedRational(4));
  EXPECT_EQ(lazy.witness_k, 3);
}

TEST(TraceCsvTest, HeaderAndRows) {
  const SetFunction f = CriticalF(1, 1, 1, 2);
  const GreedyTrace t = GreedyAdaptive(f, 2, TiePolicy::Lowest());
  EXPECT_EQ(TraceToCsv(t, f.ground()),
            "step,pick,label,gain,value,tie_count\n"
            "1,0,a1,1/2,1/2,2\n"
            "2,1,a2,1/4,3/4,2\n");
  EXPECT_EQ(TraceToCsv(GreedyAdaptive(f, 0, TiePolicy::Lowest()), f.ground()),
            "step,pick,label,gain,value,tie_count\n");
  EXPECT_NE(TraceToCsv(t, f.ground(), true).find("gain_decimal"), std::string::npos);
}

// Random rational-valued functions: telescoping, dominance and the
// non-adaptive prefix property hold for any oracle.
TEST(GreedyPropertyTest, RandomFunctions) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    std::vector<Rational> table(size_t{1} << n);
    for (auto& v : table) v = MakeRational(rng() % 7, 1 + rng() % 3);
    table[0] = 0;
    SetFunction f(GroundSet(n), [table](Subset s) { return table[s.mask()]; });
    const GreedyTrace full = GreedyAdaptive(f, n, TiePolicy::Lowest());
    Rational sum = full.values[0];
    for (int i = 0; i < full.steps(); ++i) {
      sum += full.gains[i];
      EXPECT_EQ(sum, full.values[i + 1]);
      const Subset prev = full.chain[i];
      for (int x = 0; x < n; ++x) {
        if (!prev.contains(x)) EXPECT_GE(full.values[i + 1], f(prev.with(x)));
      }
    }
    const int kbar = SaturationCardinality(f, TiePolicy::Lowest());
    for (int k = 0; k <= n; ++k) {
      const GreedyTrace lazy = GreedyNonAdaptive(f, k, TiePolicy::Lowest());
      ASSERT_EQ(lazy.steps(), std::min(k, kbar));
      for (int i = 0; i <= lazy.steps(); ++i) EXPECT_EQ(lazy.chain[i], full.chain[i]);
    }
    const std::vector<OptimumRecord> optima = OptimaByCardinality(f);
    reference::Fn ref = [&](reference::Mask m) { return table[m]; };
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(optima[k].best_value, reference::BestValue(n, ref, k));
      EXPECT_LE(optima[k].best_set.size(), k);
      EXPECT_EQ(f(optima[k].best_set), optima[k].best_value);
    }
  }
}

}  // namespace
}  // namespace greedy
