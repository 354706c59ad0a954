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

#include "rbg/equilibrium_lab.h"

#include <map>
#include <utility>

#include "rbg/errors.h"

namespace rbg {
namespace {

PlayerAudit AuditGeneral(const GameInstance& game, const StrategyProfile& sp,
                         int player) {
  PlayerAudit audit;
  audit.current_cost = ComputePrivateCost(game, sp, player);
  BestResponse best = ComputeBestResponse(game, sp, player);
  audit.best_response = std::move(best.config);
  audit.best_response_cost = std::move(best.cost);
  audit.violation =
      PrivateCost::Finite(audit.best_response_cost) < audit.current_cost;
  return audit;
}

// A basis is a minimum-weight basis iff no single exchange lowers its weight,
// so the chosen basis is a best response iff the player pays exactly its
// residual weight and no exchange B - g + f has w_f < w_g.
PlayerAudit AuditByExchange(const GameInstance& game,
                            const StrategyProfile& sp, int player,
                            const Matroid& m) {
  PlayerAudit audit;
  audit.current_cost = ComputePrivateCost(game, sp, player);
  const std::vector<Rational> w = ResidualWeights(game, sp, player);
  const ElementSet& basis = sp.config[player];
  bool locally_optimal = !audit.current_cost.is_infinite() &&
                         audit.current_cost.value() == SetWeight(basis, w);
  for (ResourceIndex g : basis) {
    if (!locally_optimal) break;
    for (ResourceIndex f : ExchangeSet(m, basis, g)) {
      if (w[f] < w[g]) {
        locally_optimal = false;
        break;
      }
    }
  }
  if (locally_optimal) {
    audit.best_response = basis;
    audit.best_response_cost = audit.current_cost.value();
    audit.violation = false;
  } else {
    audit.best_response = MinWeightBasis(m, w);
    audit.best_response_cost = SetWeight(audit.best_response, w);
    audit.violation =
        PrivateCost::Finite(audit.best_response_cost) < audit.current_cost;
  }
  return audit;
}

}  // namespace

std::vector<Rational> ResidualWeights(const GameInstance& game,
                                      const StrategyProfile& sp, int player) {
  const std::vector<int> loads = Loads(game, sp.config);
  const int demand = game.players[player].demand;
  std::vector<Rational> w(game.num_resources());
  for (int e = 0; e < game.num_resources(); ++e) {
    const bool used = sp.config[player].Contains(e);
    const int others_load = loads[e] - (used ? demand : 0);
    Rational others_paid =
        sp.payments.ResourceTotal(e) - sp.payments.at(player, e);
    Rational needed =
        game.resources[e].cost(others_load + demand) - others_paid;
    w[e] = needed.Sign() > 0 ? needed : Rational(0);
  }
  return w;
}

BestResponse ComputeBestResponse(const GameInstance& game,
                                 const StrategyProfile& sp, int player) {
  const std::vector<Rational> w = ResidualWeights(game, sp, player);
  if (std::holds_alternative<NetworkTerminals>(
          game.players[player].strategy)) {
    WeightedChoice choice = MinWeightStrategy(game, player, w);
    return {std::move(choice.config), std::move(choice.cost)};
  }
  std::optional<BestResponse> best;
  for (ElementSet& s : EnumerateStrategies(game, player)) {
    Rational cost = SetWeight(s, w);
    if (!best || cost < best->cost) best = BestResponse{std::move(s), cost};
  }
  return *best;
}

VerificationReport VerifyPne(const GameInstance& game,
                             const StrategyProfile& sp, VerifyMode mode) {
  ValidateStrategyProfile(game, sp);
  std::vector<std::optional<Matroid>> matroids;
  if (mode != VerifyMode::kGeneral) {
    bool all = true;
    for (const Player& p : game.players) {
      matroids.push_back(AsMatroid(p.strategy));
      all = all && matroids.back().has_value();
    }
    if (!all) {
      if (mode == VerifyMode::kMatroidExchange) {
        throw PreconditionError("exchange verification needs matroid spaces");
      }
      mode = VerifyMode::kGeneral;
    }
  }
  VerificationReport report;
  report.is_pne = true;
  for (int i = 0; i < game.num_players(); ++i) {
    PlayerAudit audit = mode == VerifyMode::kGeneral
                            ? AuditGeneral(game, sp, i)
                            : AuditByExchange(game, sp, i, *matroids[i]);
    report.is_pne = report.is_pne && !audit.violation;
    report.players.push_back(std::move(audit));
  }
  return report;
}

SupportabilityResult Supportable(const GameInstance& game,
                                 const ConfigurationProfile& profile,
                                 const SupportLimits& limits) {
  ValidateProfile(game, profile);
  if (game.num_players() > limits.max_players ||
      game.num_resources() > limits.max_resources) {
    throw CapacityError("supportability is limited to " +
                        std::to_string(limits.max_players) + " players and " +
                        std::to_string(limits.max_resources) + " resources");
  }
  std::vector<std::vector<ElementSet>> deviations;
  for (int i = 0; i < game.num_players(); ++i) {
    deviations.push_back(EnumerateStrategies(game, i));
    if (deviations.back().size() > limits.max_strategies_per_player) {
      throw CapacityError("player '" + game.players[i].id + "' has " +
                          std::to_string(deviations.back().size()) +
                          " strategies; supportability allows " +
                          std::to_string(limits.max_strategies_per_player));
    }
  }

  // One variable per (player, used resource).
  std::map<std::pair<int, ResourceIndex>, int> var;
  for (int i = 0; i < game.num_players(); ++i) {
    for (ResourceIndex e : profile[i]) {
      const int next = static_cast<int>(var.size());
      var.emplace(std::make_pair(i, e), next);
    }
  }
  const int n = static_cast<int>(var.size());
  LinearSystem system(n);
  for (int k = 0; k < n; ++k) system.AddNonNegative(k);

  const std::vector<int> loads = Loads(game, profile);
  for (int e = 0; e < game.num_resources(); ++e) {
    if (loads[e] == 0) continue;
    std::vector<Rational> a(n);
    for (int i = 0; i < game.num_players(); ++i) {
      if (profile[i].Contains(e)) a[var.at({i, e})] = 1;
    }
    system.AddEqual(std::move(a), game.resources[e].cost(loads[e]));
  }

  for (int i = 0; i < game.num_players(); ++i) {
    const int demand = game.players[i].demand;
    for (const ElementSet& alternative : deviations[i]) {
      if (alternative == profile[i]) continue;
      std::vector<Rational> a(n);
      for (ResourceIndex e : profile[i].Minus(alternative)) {
        a[var.at({i, e})] = 1;
      }
      Rational extra;
      for (ResourceIndex e : alternative.Minus(profile[i])) {
        extra += game.resources[e].cost.Marginal(loads[e], demand);
      }
      system.AddLessEqual(std::move(a), std::move(extra));
    }
  }

  SupportabilityResult result;
  result.exhausted_disjuncts = 1;
  result.num_constraints = system.constraints().size();
  auto point = FindFeasiblePoint(system, limits.fourier_motzkin);
  if (point) {
    PaymentMatrix payments(game.num_players(), game.num_resources());
    for (const auto& [key, k] : var) {
      payments.at(key.first, key.second) = (*point)[k];
    }
    result.payments = std::move(payments);
  }
  return result;
}

ExistenceResult PneExistsExhaustive(const GameInstance& game,
                                    const SupportLimits& limits,
                                    std::size_t max_profiles) {
  ExistenceResult result;
  ForEachProfile(game, max_profiles, [&](const ConfigurationProfile& profile) {
    ++result.profiles_checked;
    SupportabilityResult support = Supportable(game, profile, limits);
    if (!support.payments) return true;
    StrategyProfile witness{profile, std::move(*support.payments)};
    if (!VerifyPne(game, witness, VerifyMode::kGeneral).is_pne) {
      throw InvariantViolation("supportable payments fail verification");
    }
    result.exists = true;
    result.witness = std::move(witness);
    return false;
  });
  return result;
}

}  // namespace rbg
