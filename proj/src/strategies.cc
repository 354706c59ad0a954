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

#include "rbg/strategies.h"

#include <algorithm>

#include "rbg/errors.h"

namespace rbg {

std::optional<Matroid> AsMatroid(const StrategySpace& space) {
  if (const auto* m = std::get_if<Matroid>(&space)) return *m;
  if (const auto* a = std::get_if<ExplicitAntichain>(&space)) {
    if (!ValidateExplicitBases(a->sets)) return Matroid::FromBases(a->sets);
  }
  return std::nullopt;
}

bool AllMatroidSpaces(const GameInstance& game) {
  for (const Player& p : game.players) {
    if (!AsMatroid(p.strategy)) return false;
  }
  return true;
}

std::vector<ElementSet> EnumerateStrategies(const GameInstance& game,
                                            int player, std::size_t limit) {
  const StrategySpace& space = game.players[player].strategy;
  if (const auto* m = std::get_if<Matroid>(&space)) {
    std::vector<ElementSet> bases = EnumerateBases(*m);
    if (bases.size() > limit) {
      throw CapacityError("player '" + game.players[player].id + "' has " +
                          std::to_string(bases.size()) + " bases");
    }
    return bases;
  }
  if (const auto* a = std::get_if<ExplicitAntichain>(&space)) {
    if (a->sets.size() > limit) {
      throw CapacityError("player '" + game.players[player].id +
                          "' has too many configurations");
    }
    std::vector<ElementSet> sets = a->sets;
    std::sort(sets.begin(), sets.end());
    return sets;
  }
  const auto& t = std::get<NetworkTerminals>(space);
  return EnumerateSimplePaths(*game.network, t.source, t.target, limit);
}

void ForEachProfile(
    const GameInstance& game, std::size_t max_profiles,
    const std::function<bool(const ConfigurationProfile&)>& visit) {
  std::vector<std::vector<ElementSet>> spaces;
  std::size_t total = 1;
  for (int i = 0; i < game.num_players(); ++i) {
    spaces.push_back(EnumerateStrategies(game, i));
    total *= spaces.back().size();
    if (total > max_profiles) {
      throw CapacityError("more than " + std::to_string(max_profiles) +
                          " configuration profiles");
    }
  }
  std::vector<std::size_t> digit(spaces.size(), 0);
  ConfigurationProfile profile(spaces.size());
  for (std::size_t i = 0; i < spaces.size(); ++i) profile[i] = spaces[i][0];
  while (true) {
    if (!visit(profile)) return;
    int i = static_cast<int>(spaces.size()) - 1;
    while (i >= 0 && digit[i] + 1 == spaces[i].size()) {
      digit[i] = 0;
      profile[i] = spaces[i][0];
      --i;
    }
    if (i < 0) return;
    ++digit[i];
    profile[i] = spaces[i][digit[i]];
  }
}

Rational SetWeight(const ElementSet& s, std::span<const Rational> weights) {
  Rational total;
  for (ResourceIndex e : s) total += weights[e];
  return total;
}

WeightedChoice MinWeightStrategy(const GameInstance& game, int player,
                                 std::span<const Rational> weights,
                                 std::size_t limit) {
  const StrategySpace& space = game.players[player].strategy;
  if (const auto* m = std::get_if<Matroid>(&space)) {
    ElementSet basis = MinWeightBasis(*m, weights);
    Rational cost = SetWeight(basis, weights);
    return {std::move(basis), std::move(cost)};
  }
  if (const auto* t = std::get_if<NetworkTerminals>(&space)) {
    auto path = LexMinWeightPath(*game.network, t->source, t->target, weights);
    if (!path) {
      throw InputError("player '" + game.players[player].id +
                       "' cannot reach its target");
    }
    Rational cost = SetWeight(*path, weights);
    return {std::move(*path), std::move(cost)};
  }
  std::optional<WeightedChoice> best;
  for (ElementSet& s : EnumerateStrategies(game, player, limit)) {
    Rational cost = SetWeight(s, weights);
    if (!best || cost < best->cost) best = WeightedChoice{std::move(s), cost};
  }
  return *best;
}

}  // namespace rbg
