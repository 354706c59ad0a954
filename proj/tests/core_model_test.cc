// Copyright 2026 The rbgames Authors
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

#include <gtest/gtest.h>

#include "rbg/errors.h"
#include "rbg/game.h"
#include "rbg/gallery.h"
#include "rbg/rational.h"
#include "testing/random_instances.h"

namespace rbg {
namespace {

GameInstance OneResourceGame(std::vector<Rational> cost, int players,
                             std::vector<int> demands = {}) {
  GameInstance g;
  g.resources.push_back({"e", CostFunction(std::move(cost))});
  for (int i = 0; i < players; ++i) {
    g.players.push_back({std::to_string(i + 1),
                         demands.empty() ? 1 : demands[i],
                         Matroid::Free(ElementSet{0})});
  }
  g.Validate();
  return g;
}

TEST(RationalTest, ParsesAndPrints) {
  EXPECT_EQ(Rational::Parse("11/2"), Rational(11, 2));
  EXPECT_EQ(Rational::Parse("-3"), Rational(-3));
  EXPECT_EQ(Rational(6, 4).ToString(), "3/2");
  EXPECT_EQ(Rational(4, 2).ToString(), "2");
  EXPECT_THROW(Rational::Parse("1.5"), InputError);
  EXPECT_THROW(Rational::Parse("1/0"), InputError);
  EXPECT_THROW(Rational(1) / Rational(0), InputError);
}

TEST(RationalTest, CeilRoundsUp) {
  EXPECT_EQ(Rational(39, 2).Ceil(), Rational(20));
  EXPECT_EQ(Rational(-3, 2).Ceil(), Rational(-1));
  EXPECT_EQ(Rational(4).Ceil(), Rational(4));
}

TEST(CostFunctionTest, RejectsInvalidTables) {
  EXPECT_THROW(CostFunction({}), InputError);
  EXPECT_THROW(CostFunction({1, 2}), InputError);
  EXPECT_THROW(CostFunction({0, 2, 1}), InputError);
  EXPECT_THROW(CostFunction({0, 1})(2), InputError);
}

TEST(CostFunctionTest, NamedFamilies) {
  EXPECT_EQ(CostFunction::Linear(3, 3).values(),
            (std::vector<Rational>{0, 3, 6, 9}));
  EXPECT_EQ(CostFunction::Fixed(Rational(11, 2), 2).values(),
            (std::vector<Rational>{0, Rational(11, 2), Rational(11, 2)}));
}

TEST(ClassifyMarginalTest, Examples) {
  EXPECT_EQ(ClassifyMarginal(CostFunction({0, 1, 1, 100})),
            MarginalClass::kNeither);
  EXPECT_EQ(ClassifyMarginal(CostFunction::Linear(Rational(7, 3), 5)),
            MarginalClass::kBoth);
  EXPECT_EQ(ClassifyMarginal(CostFunction({0, 2, 3, Rational(7, 2)})),
            MarginalClass::kNonIncreasing);
  EXPECT_EQ(ClassifyMarginal(CostFunction({0, 1, 4, 9})),
            MarginalClass::kNonDecreasing);
  EXPECT_EQ(ClassifyMarginal(CostFunction::Fixed(1, 4)),
            MarginalClass::kNonIncreasing);
}

TEST(ClassifyMarginalTest, BothIffAffine) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int max_load = testing::RandomInt(rng, 1, 5);
    CostFunction c = testing::RandomMonotoneCost(rng, max_load, 4);
    bool affine = true;
    for (int t = 0; t <= max_load; ++t) {
      affine = affine && c(t) == c(1) * t;
    }
    EXPECT_EQ(ClassifyMarginal(c) == MarginalClass::kBoth, affine);
  }
}

TEST(LoadTest, SumsDemands) {
  GameInstance g = OneResourceGame({0, 1, 2, 3}, 3);
  EXPECT_EQ(Load(g, {{0}, {0}, {0}}, 0), 3);
  GameInstance u = Fig1a();
  EXPECT_EQ(Load(u, {{1}, {1}, {1}}, 0), 0);
  GameInstance w = OneResourceGame(CostFunction::Linear(1, 9).values(), 2,
                                   {5, 4});
  EXPECT_EQ(Load(w, {{0}, {0}}, 0), 9);
  EXPECT_THROW(Load(g, {{0}, {0}, {0}}, 5), InputError);
}

TEST(LoadTest, MatchesNaiveResum) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GameInstance g = testing::RandomWeightedMatroidGame(
        seed, testing::CostFamily::kMonotone);
    ConfigurationProfile profile;
    for (int i = 0; i < g.num_players(); ++i) {
      profile.push_back(MinWeightBasis(std::get<Matroid>(g.players[i].strategy),
                                       std::vector<Rational>(
                                           g.num_resources())));
    }
    std::vector<int> loads = Loads(g, profile);
    for (int e = 0; e < g.num_resources(); ++e) {
      int naive = 0;
      for (int i = 0; i < g.num_players(); ++i) {
        if (profile[i].Contains(e)) naive += g.players[i].demand;
      }
      EXPECT_EQ(loads[e], naive);
    }
  }
}

TEST(SocialCostTest, Examples) {
  EXPECT_EQ(SocialCost(OneResourceGame({0, 1}, 1), {{0}}), Rational(1));
  EXPECT_EQ(SocialCost(Fig1a(), {{0}, {0}, {0}}), Rational(100));
  GameInstance g;
  g.resources = {{"e", CostFunction({0, 2, 4})},
                 {"f", CostFunction({0, 2, 4})}};
  for (const char* id : {"1", "2"}) {
    g.players.push_back({id, 1, Matroid::Uniform(ElementSet{0, 1}, 1)});
  }
  g.Validate();
  EXPECT_EQ(SocialCost(g, {{0}, {1}}), Rational(4));
}

TEST(PrivateCostTest, Examples) {
  GameInstance g = OneResourceGame({0, 1}, 1);
  StrategyProfile sp{{{0}}, PaymentMatrix(1, 1)};
  EXPECT_TRUE(ComputePrivateCost(g, sp, 0).is_infinite());
  sp.payments.at(0, 0) = 1;
  EXPECT_EQ(ComputePrivateCost(g, sp, 0), PrivateCost::Finite(1));

  GameInstance shared = OneResourceGame({0, 1, 1}, 2);
  StrategyProfile half{{{0}, {0}}, PaymentMatrix(2, 1)};
  half.payments.at(0, 0) = Rational(1, 2);
  half.payments.at(1, 0) = Rational(1, 2);
  EXPECT_EQ(ComputePrivateCost(shared, half, 0),
            PrivateCost::Finite(Rational(1, 2)));
  EXPECT_EQ(ComputePrivateCost(shared, half, 1),
            PrivateCost::Finite(Rational(1, 2)));
  // Lowering one payment below coverage un-buys the resource for both.
  half.payments.at(1, 0) = Rational(1, 3);
  EXPECT_TRUE(ComputePrivateCost(shared, half, 0).is_infinite());
  EXPECT_TRUE(ComputePrivateCost(shared, half, 1).is_infinite());
}

TEST(PrivateCostTest, InfinityIsLargest) {
  EXPECT_TRUE(PrivateCost::Finite(1000) < PrivateCost::Infinite());
  EXPECT_FALSE(PrivateCost::Infinite() < PrivateCost::Infinite());
  EXPECT_EQ(PrivateCost::Infinite().ToString(), "inf");
}

TEST(ValidateTest, RejectsBrokenInstances) {
  GameInstance g = OneResourceGame({0, 1}, 1);
  g.players.push_back({"2", 1, Matroid::Free(ElementSet{0})});
  EXPECT_THROW(g.Validate(), InputError);  // cost table too short
  GameInstance d = OneResourceGame({0, 1}, 1);
  d.players[0].demand = 0;
  EXPECT_THROW(d.Validate(), InputError);
  GameInstance a = OneResourceGame({0, 1, 2}, 1);
  a.resources.push_back({"f", CostFunction({0, 1, 2})});
  a.players[0].strategy = ExplicitAntichain{{ElementSet{0}, ElementSet{0, 1}}};
  EXPECT_THROW(a.Validate(), InputError);  // comparable sets
  a.players[0].strategy = ExplicitAntichain{{ElementSet{0}, ElementSet{1}}};
  EXPECT_NO_THROW(a.Validate());
}

TEST(ValidateTest, PaymentSupport) {
  GameInstance g = OneResourceGame({0, 1}, 1);
  g.resources.push_back({"f", CostFunction({0, 1})});
  g.players[0].strategy = Matroid::Uniform(ElementSet{0, 1}, 1);
  g.Validate();
  StrategyProfile sp{{{0}}, PaymentMatrix(1, 2)};
  sp.payments.at(0, 1) = 1;
  EXPECT_THROW(ValidateStrategyProfile(g, sp), InputError);
  sp.payments.at(0, 1) = 0;
  sp.payments.at(0, 0) = -1;
  EXPECT_THROW(ValidateStrategyProfile(g, sp), InputError);
  EXPECT_THROW(ValidateProfile(g, {{0, 1}}), InputError);
}

}  // namespace
}  // namespace rbg
