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

#include "rbg/support_charpay.h"

#include <algorithm>
#include <utility>

#include "rbg/errors.h"

namespace rbg {
namespace {

std::vector<Matroid> RequireMatroids(const GameInstance& game) {
  std::vector<Matroid> out;
  for (const Player& p : game.players) {
    std::optional<Matroid> m = AsMatroid(p.strategy);
    if (!m) {
      throw InputError("player '" + p.id + "' does not have a matroid space");
    }
    out.push_back(std::move(*m));
  }
  return out;
}

}  // namespace

FixedSet FixedElements(const GameInstance& game) {
  const std::vector<Matroid> matroids = RequireMatroids(game);
  FixedSet fixed;
  fixed.witness.assign(game.num_resources(), -1);
  for (int i = game.num_players() - 1; i >= 0; --i) {
    for (ResourceIndex e : matroids[i].ground()) {
      if (IsColoop(matroids[i], e)) fixed.witness[e] = i;
    }
  }
  for (int e = 0; e < game.num_resources(); ++e) {
    if (fixed.witness[e] >= 0) fixed.elements.Insert(e);
  }
  return fixed;
}

const DeltaEntry* DeltaTable::Find(int player, ResourceIndex e) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), std::make_pair(e, player),
      [](const DeltaEntry& d, const std::pair<ResourceIndex, int>& key) {
        return std::make_pair(d.resource, d.player) < key;
      });
  if (it == entries.end() || it->resource != e || it->player != player) {
    return nullptr;
  }
  return &*it;
}

DeltaTable ComputeDeltaTable(const GameInstance& game,
                             const ConfigurationProfile& profile) {
  const std::vector<Matroid> matroids = RequireMatroids(game);
  ValidateProfile(game, profile);
  DeltaTable table;
  table.fixed = FixedElements(game);
  const std::vector<int> loads = Loads(game, profile);
  for (int e = 0; e < game.num_resources(); ++e) {
    if (table.fixed.elements.Contains(e)) continue;
    for (int i = 0; i < game.num_players(); ++i) {
      if (!profile[i].Contains(e)) continue;
      const int demand = game.players[i].demand;
      std::optional<DeltaEntry> best;
      for (ResourceIndex f : ExchangeSet(matroids[i], profile[i], e)) {
        Rational delta = game.resources[f].cost.Marginal(loads[f], demand);
        if (!best || delta < best->delta) {
          best = DeltaEntry{i, e, std::move(delta), f};
        }
      }
      if (!best) {
        throw InvariantViolation("non-fixed resource without exchange partner");
      }
      table.entries.push_back(std::move(*best));
    }
  }
  return table;
}

std::vector<std::optional<Rational>> SupportSlack(
    const GameInstance& game, const ConfigurationProfile& profile,
    const DeltaTable& table) {
  const std::vector<int> loads = Loads(game, profile);
  std::vector<std::optional<Rational>> slack(game.num_resources());
  for (int e = 0; e < game.num_resources(); ++e) {
    if (!table.fixed.elements.Contains(e)) {
      slack[e] = -game.resources[e].cost(loads[e]);
    }
  }
  for (const DeltaEntry& d : table.entries) *slack[d.resource] += d.delta;
  return slack;
}

bool CheckSupportableMatroid(const GameInstance& game,
                             const ConfigurationProfile& profile) {
  DeltaTable table = ComputeDeltaTable(game, profile);
  for (const auto& s : SupportSlack(game, profile, table)) {
    if (s && s->Sign() < 0) return false;
  }
  return true;
}

PaymentMatrix ConstructPayments(const GameInstance& game,
                                const ConfigurationProfile& profile) {
  DeltaTable table = ComputeDeltaTable(game, profile);
  const std::vector<std::optional<Rational>> slack =
      SupportSlack(game, profile, table);
  for (int e = 0; e < game.num_resources(); ++e) {
    if (slack[e] && slack[e]->Sign() < 0) {
      throw PreconditionError("profile is not supportable at resource '" +
                              game.resources[e].id + "'");
    }
  }
  const std::vector<int> loads = Loads(game, profile);
  PaymentMatrix payments(game.num_players(), game.num_resources());
  // A coloop lies in every basis, so the witness always uses e.
  for (ResourceIndex e : table.fixed.elements) {
    payments.at(table.fixed.witness[e], e) = game.resources[e].cost(loads[e]);
  }
  std::vector<Rational> total(game.num_resources());
  for (const DeltaEntry& d : table.entries) total[d.resource] += d.delta;
  for (const DeltaEntry& d : table.entries) {
    if (total[d.resource].IsZero()) continue;
    payments.at(d.player, d.resource) =
        d.delta / total[d.resource] * game.resources[d.resource].cost(
                                          loads[d.resource]);
  }
  return payments;
}

ConfigurationProfile SocialOptimumBruteforce(const GameInstance& game,
                                             std::size_t max_profiles) {
  std::optional<ConfigurationProfile> best;
  Rational best_cost;
  ForEachProfile(game, max_profiles, [&](const ConfigurationProfile& profile) {
    Rational cost = SocialCost(game, profile);
    if (!best || cost < best_cost) {
      best = profile;
      best_cost = std::move(cost);
    }
    return true;
  });
  return *best;
}

StrategyProfile SolveWeightedMatroid(const GameInstance& game,
                                     std::size_t max_profiles) {
  RequireMatroids(game);
  for (const Resource& r : game.resources) {
    if (!IsMarginallyNonIncreasing(ClassifyMarginal(r.cost))) {
      throw UnsupportedClassError("resource '" + r.id +
                                  "' is not marginally non-increasing");
    }
  }
  ConfigurationProfile optimum = SocialOptimumBruteforce(game, max_profiles);
  if (!CheckSupportableMatroid(game, optimum)) {
    throw InvariantViolation(
        "a social optimum violates the support condition");
  }
  PaymentMatrix payments = ConstructPayments(game, optimum);
  return {std::move(optimum), std::move(payments)};
}

}  // namespace rbg
