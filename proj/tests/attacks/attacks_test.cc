// Copyright 2026 The wvprivacy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "wvp/attacks/attacks.h"
#include "wvp/attacks/subset_sum.h"
#include "wvp/core/noise.h"
#include "wvp/core/rng.h"
#include "wvp/core/tally.h"
#include "wvp/core/transcript.h"

namespace wvp {
namespace {

std::vector<Units> Totals(const VotingTranscript& t) {
  return ToUnits(TallyRaw(t).totals);
}

TEST(UnifiedAttackTest, RecoversTwoVoterExample) {
  const auto t =
      VotingTranscript::FromDecimals("ex", 2, {"1.1", "2.3"}, {kNo, kYes});
  const auto w = ToUnits(t.weights());
  const auto result = UnifiedAttack(w, Totals(t));
  EXPECT_TRUE(result.full_recovery);
  EXPECT_EQ(result.determined.at(0), kNo);
  EXPECT_EQ(result.determined.at(1), kYes);
  EXPECT_DOUBLE_EQ(result.ballots_leaked_pct, 100.0);
}

TEST(UnifiedAttackTest, SubsetSumFindsNothingAgainstNonExactTotals) {
  const auto t =
      VotingTranscript::FromDecimals("ex", 2, {"1.1", "2.3"}, {kNo, kYes});
  const auto w = ToUnits(t.weights());
  const std::vector<Units> noised = {Weight::Parse("2.2").units(),
                                     Weight::Parse("1.2").units()};
  const auto result = SubsetSumAttack(w, noised);
  EXPECT_TRUE(result.determined.empty());
  EXPECT_FALSE(result.deniability_broken);
}

TEST(UnifiedAttackTest, EqualWeightsKeepDeniability) {
  const auto t = VotingTranscript::FromDecimals(
      "eq", 2, {"1", "1", "1", "1", "1"}, {0, 1, 0, 1, 0});
  const auto result = UnifiedAttack(ToUnits(t.weights()), Totals(t));
  EXPECT_TRUE(result.determined.empty());
  EXPECT_FALSE(result.deniability_broken);
  EXPECT_DOUBLE_EQ(result.weight_leaked_pct, 0.0);
}

TEST(UnifiedAttackTest, UnanimousVoteIsFullyRecovered) {
  const auto t =
      VotingTranscript::FromDecimals("u", 2, {"1", "1", "1"}, {1, 1, 1});
  EXPECT_TRUE(UnifiedAttack(ToUnits(t.weights()), Totals(t)).full_recovery);
}

TEST(WhaleAttackTest, DeducesWhalesIteratively) {
  // yes = 10 + 1 = 11, no = 3 + 1 = 4. The 10 exceeds s2 = 4 and is yes;
  // then yes residual 1, no 4: the 3 exceeds 1 and is no.
  const auto t = VotingTranscript::FromDecimals("w", 2, {"10", "3", "1", "1"},
                                                {kYes, kNo, kYes, kNo});
  const auto result = WhaleAttack(ToUnits(t.weights()), Totals(t));
  EXPECT_EQ(result.determined.at(0), kYes);
  EXPECT_EQ(result.determined.at(1), kNo);
  EXPECT_EQ(result.determined.count(2), 0u);
  EXPECT_EQ(result.determined.count(3), 0u);
  EXPECT_EQ(result.subset_sum, SubsetSumStatus::kNotRun);
}

TEST(UnifiedAttackTest, SkipsSubsetSumAboveCap) {
  const auto t = testing::RandomDistinctBinary(3, 12, 3);
  const auto w = ToUnits(t.weights());
  AttackState state = AttackState::Initial(w.size(), Totals(t));
  EXPECT_EQ(SubsetSumStage(w, state, 5), SubsetSumStatus::kSkippedTooLarge);
  EXPECT_TRUE(state.determined.empty());
}

TEST(UnifiedAttackTest, MatchesEnumerationOracleOnBinaryTranscripts) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed);
    const size_t n = 1 + rng.NextU64() % 10;
    // Few decimals and a small range make collisions between subset sums
    // common, which is where the attack has to be careful.
    const auto t = testing::RandomDistinctBinary(seed, n, 0);
    const auto w = ToUnits(t.weights());
    const auto totals = Totals(t);
    const auto expected = testing::ConsensusByEnumeration(w, totals);
    const auto result = UnifiedAttack(w, totals);
    EXPECT_EQ(result.determined, expected) << "seed " << seed;
  }
}

TEST(UnifiedAttackTest, MatchesEnumerationOracleWithRepeatedWeights) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    Rng rng(seed + 1000);
    const size_t n = 1 + rng.NextU64() % 9;
    std::vector<std::string> weights;
    std::vector<int> choices;
    for (size_t i = 0; i < n; ++i) {
      weights.push_back(std::to_string(1 + rng.NextU64() % 6));
      choices.push_back(static_cast<int>(rng.NextU64() % 2));
    }
    const auto t = VotingTranscript::FromDecimals("r", 2, weights, choices);
    const auto w = ToUnits(t.weights());
    const auto totals = Totals(t);
    EXPECT_EQ(UnifiedAttack(w, totals).determined,
              testing::ConsensusByEnumeration(w, totals))
        << "seed " << seed;
  }
}

TEST(UnifiedAttackTest, MatchesEnumerationOracleOnThreeChoices) {
  for (uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(seed + 5000);
    const size_t n = 1 + rng.NextU64() % 7;
    std::vector<std::string> weights;
    std::vector<int> choices;
    for (size_t i = 0; i < n; ++i) {
      weights.push_back(std::to_string(1 + rng.NextU64() % 9));
      choices.push_back(static_cast<int>(rng.NextU64() % 3));
    }
    const auto t = VotingTranscript::FromDecimals("m", 3, weights, choices);
    const auto w = ToUnits(t.weights());
    const auto totals = Totals(t);
    const auto result = UnifiedAttack(w, totals);
    const auto expected = testing::ConsensusByEnumeration(w, totals);
    // Every determination is correct and, at this size, none is missed.
    EXPECT_EQ(result.determined, expected) << "seed " << seed;
  }
}

TEST(NoisedWhaleAttackTest, NeverBeatsExactTallies) {
  for (uint64_t seed = 0; seed < 100; ++seed) {
    const auto t = testing::RandomDistinctBinary(seed + 77, 8, 2);
    const auto w = ToUnits(t.weights());
    const auto raw = UnifiedAttack(w, Totals(t));
    const double total = t.TotalWeightAsDouble();
    const auto spec = CalibrateNoise(0.1, 0.95, total);
    const auto noised = TallyCorrectedNoised(t, spec, seed);
    const auto wd = t.WeightsAsDouble();
    const auto result = NoisedWhaleAttack(wd, noised.noised_totals,
                                          noised.winner, 0.1, total);
    EXPECT_LE(result.determined.size(), raw.determined.size());
  }
}

TEST(NoisedWhaleAttackTest, MajorityHolderFollowsPublishedWinner) {
  const std::vector<double> w = {6, 1, 1, 1};
  const std::vector<double> noised = {7.5, 1.5};
  const auto result = NoisedWhaleAttack(w, noised, kYes, 0.3, 9.0);
  EXPECT_EQ(result.determined.at(0), kYes);
  EXPECT_EQ(result.determined.size(), 1u);
}

TEST(SubsetSumTest, EnumeratesSortedSums) {
  const std::vector<Units> items = {3, 1, 2};
  const auto sums = SubsetSums::Enumerate(items, true);
  const std::vector<Units> expected = {0, 1, 2, 3, 3, 4, 5, 6};
  EXPECT_TRUE(std::equal(sums.sums().begin(), sums.sums().end(),
                         expected.begin(), expected.end()));
  for (size_t k = 0; k < sums.size(); ++k) {
    Units s = 0;
    for (size_t p = 0; p < items.size(); ++p) {
      if (sums.masks()[k] >> p & 1) s += items[p];
    }
    EXPECT_EQ(s, sums.sums()[k]);
  }
}

TEST(SubsetSumTest, AgreesWithBruteForce) {
  Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t m = 1 + rng.NextU64() % 12;
    std::vector<Units> items;
    for (size_t k = 0; k < m; ++k) items.push_back(rng.NextU64() % 50);
    const Units target = rng.NextU64() % 200;
    bool expected = false;
    size_t count = 0;
    for (uint64_t mask = 0; mask < (uint64_t{1} << m); ++mask) {
      Units s = 0;
      for (size_t k = 0; k < m; ++k) {
        if (mask >> k & 1) s += items[k];
      }
      if (s == target) {
        expected = true;
        ++count;
      }
    }
    EXPECT_EQ(HasSubsetWithSum(items, target), expected);
    bool truncated = false;
    const auto found = SubsetsWithSum(items, target, 1 << 20, &truncated);
    EXPECT_FALSE(truncated);
    EXPECT_EQ(found.size(), count);
  }
}

TEST(SubsetSumTest, PartitionFeasibility) {
  const std::vector<Units> items = {1, 2, 3, 4};
  EXPECT_EQ(PartitionFeasibility(items, std::vector<Units>{5, 5}),
            Feasibility::kYes);
  EXPECT_EQ(PartitionFeasibility(items, std::vector<Units>{3, 3, 4}),
            Feasibility::kYes);
  EXPECT_EQ(PartitionFeasibility(items, std::vector<Units>{9, 1, 0}),
            Feasibility::kYes);
  EXPECT_EQ(PartitionFeasibility(items, std::vector<Units>{8, 1, 1}),
            Feasibility::kNo);
}

TEST(SubsetSumTest, RejectsTooManyItems) {
  std::vector<Units> items(SubsetSums::kMaxItems + 1, 1);
  EXPECT_THROW(SubsetSums::Enumerate(items, false), std::invalid_argument);
}

}  // namespace
}  // namespace wvp
