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

// Equilibria for marginally non-decreasing costs: marginal cost pricing on a
// social optimum, and sequential insertion by best response.

#ifndef RBG_CONVEX_PRICING_H_
#define RBG_CONVEX_PRICING_H_

#include <vector>

#include "rbg/game.h"
#include "rbg/strategies.h"

namespace rbg {

// A permutation of player indices.
using InsertionOrder = std::vector<int>;

InsertionOrder DeclarationOrder(const GameInstance& game);

// Throws InputError unless `order` is a permutation of the players.
void ValidateOrder(const GameInstance& game, const InsertionOrder& order);

// Players are charged in `order`; the j-th user of e pays
// c_e(l^{<=j}) - c_e(l^{<=j-1}), where l^{<=j} is the load of the first j
// users.
PaymentMatrix MarginalCostPayments(const GameInstance& game,
                                   const ConfigurationProfile& profile,
                                   const InsertionOrder& order);

// Marginal cost pricing on a social optimum (brute force; a lone player gets
// its cheapest configuration directly). Throws UnsupportedClassError unless
// every cost is marginally non-decreasing.
StrategyProfile PneByMarginalPricing(
    const GameInstance& game, const InsertionOrder& order,
    std::size_t max_profiles = kDefaultProfileLimit);

// Inserts players in `order`; each picks the configuration minimizing its
// marginal cost under the current loads and pays exactly those marginals.
// Throws UnsupportedClassError unless every cost is marginally
// non-decreasing.
StrategyProfile SequentialInsertion(const GameInstance& game,
                                    const InsertionOrder& order);

// Minimum-marginal-cost path for a network player given per-resource loads
// of the others. Ties go to the lexicographically smallest node sequence.
// Throws InputError if the player's target is unreachable.
ElementSet NetworkBestResponse(const GameInstance& game, int player,
                               const std::vector<int>& loads);

}  // namespace rbg

#endif  // RBG_CONVEX_PRICING_H_
