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

#include "rbg/network.h"

#include <gtest/gtest.h>

#include <vector>

#include "rbg/fourier_motzkin.h"
#include "rbg/strategies.h"
#include "testing/oracles.h"
#include "testing/random_instances.h"

namespace rbg {
namespace {

TEST(NetworkTest, ParallelArcs) {
  Network net{{"s", "t"}, {{0, 1, 0}, {0, 1, 1}}};
  std::vector<Rational> w = {3, 1};
  EXPECT_EQ(LexMinWeightPath(net, 0, 1, w), (ElementSet{1}));
  EXPECT_TRUE(IsSimplePath(net, 0, 1, {0}));
  EXPECT_FALSE(IsSimplePath(net, 0, 1, {0, 1}));
  EXPECT_FALSE(IsReachable(net, 1, 0));
  EXPECT_FALSE(LexMinWeightPath(net, 1, 0, w).has_value());
}

TEST(NetworkTest, ZeroWeightsPickLexFirstNodeSequence) {
  // s -> a -> t and s -> b -> t, with a declared after b.
  Network net{{"s", "t", "b", "a"},
              {{0, 3, 0}, {3, 1, 1}, {0, 2, 2}, {2, 1, 3}}};
  std::vector<Rational> w(4);
  // Node sequence (0,2,1) beats (0,3,1).
  EXPECT_EQ(LexMinWeightPath(net, 0, 1, w), (ElementSet{2, 3}));
}

TEST(NetworkTest, ChainHasUniquePath) {
  Network net{{"a", "b", "c"}, {{0, 1, 0}, {1, 2, 1}}};
  EXPECT_EQ(EnumerateSimplePaths(net, 0, 2, 10),
            (std::vector<ElementSet>{{0, 1}}));
}

TEST(NetworkPropertyTest, LexMinPathIsMinimumOverEnumeration) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GameInstance g = testing::RandomNetworkGame(seed);
    testing::Rng rng(seed);
    std::vector<Rational> w(g.num_resources());
    for (Rational& x : w) x = testing::RandomInt(rng, 0, 3);
    const auto& t = std::get<NetworkTerminals>(g.players[0].strategy);
    auto path = LexMinWeightPath(*g.network, t.source, t.target, w);
    ASSERT_TRUE(path.has_value());
    EXPECT_TRUE(IsSimplePath(*g.network, t.source, t.target, *path));
    for (const ElementSet& p :
         EnumerateSimplePaths(*g.network, t.source, t.target, 100000)) {
      EXPECT_LE(SetWeight(*path, w), SetWeight(p, w));
    }
  }
}

TEST(FourierMotzkinTest, SmallSystems) {
  LinearSystem s(2);
  s.AddNonNegative(0);
  s.AddNonNegative(1);
  s.AddEqual({1, 1}, 3);
  s.AddLessEqual({1, -1}, -1);
  auto x = FindFeasiblePoint(s);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(s.IsSatisfiedBy(*x));

  s.AddLessEqual({0, 1}, 1);
  EXPECT_FALSE(FindFeasiblePoint(s).has_value());

  LinearSystem empty(0);
  EXPECT_TRUE(FindFeasiblePoint(empty).has_value());
  empty.AddLessEqual({}, -1);
  EXPECT_FALSE(FindFeasiblePoint(empty).has_value());
}

TEST(FourierMotzkinPropertyTest, AgreesWithVertexEnumeration) {
  testing::Rng rng(21);
  int feasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = testing::RandomInt(rng, 1, 4);
    LinearSystem s(n);
    for (int k = 0; k < n; ++k) s.AddNonNegative(k);
    const int rows = testing::RandomInt(rng, 1, 5);
    for (int r = 0; r < rows; ++r) {
      std::vector<Rational> a(n);
      for (Rational& c : a) c = testing::RandomInt(rng, -3, 3);
      Rational b = Rational(testing::RandomInt(rng, -6, 8), 2);
      if (testing::Coin(rng, 0.25)) {
        s.AddEqual(std::move(a), std::move(b));
      } else {
        s.AddLessEqual(std::move(a), std::move(b));
      }
    }
    auto x = FindFeasiblePoint(s);
    EXPECT_EQ(x.has_value(), testing::VertexFeasible(s)) << "trial " << trial;
    if (x) {
      EXPECT_TRUE(s.IsSatisfiedBy(*x));
      ++feasible;
    }
  }
  // Both outcomes must be exercised.
  EXPECT_GT(feasible, 40);
  EXPECT_LT(feasible, 360);
}

}  // namespace
}  // namespace rbg
