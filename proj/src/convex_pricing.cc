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

#include "rbg/convex_pricing.h"

#include <numeric>
#include <utility>

#include "rbg/errors.h"
#include "rbg/network.h"
#include "rbg/support_charpay.h"

namespace rbg {
namespace {

void RequireNonDecreasing(const GameInstance& game) {
  for (const Resource& r : game.resources) {
    if (!IsMarginallyNonDecreasing(ClassifyMarginal(r.cost))) {
      throw UnsupportedClassError("resource '" + r.id +
                                  "' is not marginally non-decreasing");
    }
  }
}

std::vector<Rational> MarginalWeights(const GameInstance& game, int player,
                                      const std::vector<int>& loads) {
  const int demand = game.players[player].demand;
  std::vector<Rational> w(game.num_resources());
  for (int e = 0; e < game.num_resources(); ++e) {
    w[e] = game.resources[e].cost.Marginal(loads[e], demand);
    if (w[e].Sign() < 0) {
      throw InputError("negative marginal cost on '" + game.resources[e].id +
                       "'");
    }
  }
  return w;
}

}  // namespace

InsertionOrder DeclarationOrder(const GameInstance& game) {
  InsertionOrder order(game.num_players());
  std::iota(order.begin(), order.end(), 0);
  return order;
}

void ValidateOrder(const GameInstance& game, const InsertionOrder& order) {
  std::vector<bool> seen(game.num_players(), false);
  if (static_cast<int>(order.size()) != game.num_players()) {
    throw InputError("insertion order must list every player once");
  }
  for (int i : order) {
    if (i < 0 || i >= game.num_players() || seen[i]) {
      throw InputError("insertion order must list every player once");
    }
    seen[i] = true;
  }
}

PaymentMatrix MarginalCostPayments(const GameInstance& game,
                                   const ConfigurationProfile& profile,
                                   const InsertionOrder& order) {
  ValidateProfile(game, profile);
  ValidateOrder(game, order);
  PaymentMatrix payments(game.num_players(), game.num_resources());
  std::vector<int> load(game.num_resources(), 0);
  for (int i : order) {
    const int demand = game.players[i].demand;
    for (ResourceIndex e : profile[i]) {
      payments.at(i, e) = game.resources[e].cost.Marginal(load[e], demand);
      load[e] += demand;
    }
  }
  return payments;
}

StrategyProfile PneByMarginalPricing(const GameInstance& game,
                                     const InsertionOrder& order,
                                     std::size_t max_profiles) {
  RequireNonDecreasing(game);
  ValidateOrder(game, order);
  ConfigurationProfile optimum;
  if (game.num_players() == 1) {
    const std::vector<int> empty(game.num_resources(), 0);
    optimum.push_back(
        MinWeightStrategy(game, 0, MarginalWeights(game, 0, empty)).config);
  } else {
    optimum = SocialOptimumBruteforce(game, max_profiles);
  }
  PaymentMatrix payments = MarginalCostPayments(game, optimum, order);
  return {std::move(optimum), std::move(payments)};
}

StrategyProfile SequentialInsertion(const GameInstance& game,
                                    const InsertionOrder& order) {
  RequireNonDecreasing(game);
  ValidateOrder(game, order);
  StrategyProfile sp{ConfigurationProfile(game.num_players()),
                     PaymentMatrix(game.num_players(), game.num_resources())};
  std::vector<int> loads(game.num_resources(), 0);
  for (int i : order) {
    std::vector<Rational> w = MarginalWeights(game, i, loads);
    sp.config[i] = MinWeightStrategy(game, i, w).config;
    for (ResourceIndex e : sp.config[i]) {
      sp.payments.at(i, e) = w[e];
      loads[e] += game.players[i].demand;
    }
  }
  return sp;
}

ElementSet NetworkBestResponse(const GameInstance& game, int player,
                               const std::vector<int>& loads) {
  const auto* t =
      std::get_if<NetworkTerminals>(&game.players[player].strategy);
  if (t == nullptr || !game.network) {
    throw InputError("player '" + game.players[player].id +
                     "' is not a network player");
  }
  std::vector<Rational> w = MarginalWeights(game, player, loads);
  std::optional<ElementSet> path =
      LexMinWeightPath(*game.network, t->source, t->target, w);
  if (!path) {
    throw InputError("player '" + game.players[player].id +
                     "' cannot reach its target");
  }
  return *std::move(path);
}

}  // namespace rbg
