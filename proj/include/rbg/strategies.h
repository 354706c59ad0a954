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

#ifndef RBG_STRATEGIES_H_
#define RBG_STRATEGIES_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "rbg/game.h"

namespace rbg {

inline constexpr std::size_t kDefaultStrategyLimit = std::size_t{1} << 16;

// The space as a matroid: matroid spaces as given, explicit antichains when
// they satisfy basis exchange, nullopt otherwise (including networks).
std::optional<Matroid> AsMatroid(const StrategySpace& space);
bool AllMatroidSpaces(const GameInstance& game);

// Every configuration of the player, lexicographically ordered (networks:
// by node sequence). Throws CapacityError beyond `limit`.
std::vector<ElementSet> EnumerateStrategies(
    const GameInstance& game, int player,
    std::size_t limit = kDefaultStrategyLimit);

struct WeightedChoice {
  ElementSet config;
  Rational cost;
};

// Cheapest configuration under additive non-negative per-resource weights:
// greedy on matroids, shortest path on networks, scan on antichains.
WeightedChoice MinWeightStrategy(const GameInstance& game, int player,
                                 std::span<const Rational> weights,
                                 std::size_t limit = kDefaultStrategyLimit);

inline constexpr std::size_t kDefaultProfileLimit = 1000000;

// Visits every configuration profile in lexicographic order (player 0 most
// significant, each player's strategies as enumerated above) until `visit`
// returns false. Throws CapacityError when there are more than
// `max_profiles` profiles.
void ForEachProfile(
    const GameInstance& game, std::size_t max_profiles,
    const std::function<bool(const ConfigurationProfile&)>& visit);

Rational SetWeight(const ElementSet& s, std::span<const Rational> weights);

}  // namespace rbg

#endif  // RBG_STRATEGIES_H_
