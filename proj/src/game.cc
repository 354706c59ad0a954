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

#include "rbg/game.h"

#include <set>
#include <sstream>

#include "rbg/errors.h"

namespace rbg {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckElements(const GameInstance& game, const ElementSet& s,
                   const std::string& where) {
  for (ResourceIndex e : s) {
    if (e < 0 || e >= game.num_resources()) {
      throw InputError(where + " references unknown resource index " +
                       std::to_string(e));
    }
  }
}

void ValidateSpace(const GameInstance& game, const Player& player) {
  const std::string where = "player '" + player.id + "'";
  std::visit(
      Overloaded{
          [&](const Matroid& m) { CheckElements(game, m.ground(), where); },
          [&](const ExplicitAntichain& a) {
            if (a.sets.empty()) {
              throw InputError(where + " has an empty strategy family");
            }
            for (std::size_t i = 0; i < a.sets.size(); ++i) {
              if (a.sets[i].empty()) {
                throw InputError(where + " has an empty configuration");
              }
              CheckElements(game, a.sets[i], where);
              for (std::size_t j = 0; j < a.sets.size(); ++j) {
                if (i != j && a.sets[i].IsSubsetOf(a.sets[j])) {
                  throw InputError(where +
                                   " configurations are not an antichain");
                }
              }
            }
          },
          [&](const NetworkTerminals& t) {
            if (!game.network) {
              throw InputError(where + " routes in a missing network");
            }
            const int n = game.network->num_nodes();
            if (t.source < 0 || t.source >= n || t.target < 0 ||
                t.target >= n) {
              throw InputError(where + " has terminals outside the network");
            }
            if (t.source == t.target) {
              throw InputError(where + " has identical terminals");
            }
            if (!IsReachable(*game.network, t.source, t.target)) {
              throw InputError(where + " has no source-target path");
            }
          },
      },
      player.strategy);
}

}  // namespace

CostFunction::CostFunction(std::vector<Rational> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw InputError("empty cost table");
  if (!values_.front().IsZero()) {
    throw InputError("cost table must start at c(0) = 0");
  }
  for (std::size_t k = 1; k < values_.size(); ++k) {
    if (values_[k] < values_[k - 1]) {
      throw InputError("cost table decreases at load " + std::to_string(k));
    }
  }
}

CostFunction CostFunction::Linear(const Rational& slope, int max_load) {
  std::vector<Rational> values;
  for (int l = 0; l <= max_load; ++l) values.push_back(slope * l);
  return CostFunction(std::move(values));
}

CostFunction CostFunction::Fixed(const Rational& cost, int max_load) {
  std::vector<Rational> values(max_load + 1, cost);
  values[0] = 0;
  return CostFunction(std::move(values));
}

const Rational& CostFunction::operator()(int load) const {
  if (load < 0 || load > max_load()) {
    throw InputError("load " + std::to_string(load) +
                     " outside the tabulated range 0.." +
                     std::to_string(max_load()));
  }
  return values_[load];
}

Rational CostFunction::Marginal(int load, int step) const {
  return (*this)(load + step) - (*this)(load);
}

MarginalClass ClassifyMarginal(const CostFunction& c) {
  bool non_increasing = true;
  bool non_decreasing = true;
  for (int x = 1; x < c.max_load(); ++x) {
    Rational previous = c.Marginal(x - 1, 1);
    Rational current = c.Marginal(x, 1);
    if (current > previous) non_increasing = false;
    if (current < previous) non_decreasing = false;
  }
  if (non_increasing && non_decreasing) return MarginalClass::kBoth;
  if (non_increasing) return MarginalClass::kNonIncreasing;
  if (non_decreasing) return MarginalClass::kNonDecreasing;
  return MarginalClass::kNeither;
}

std::string_view ToString(MarginalClass mc) {
  switch (mc) {
    case MarginalClass::kNonIncreasing:
      return "nonincreasing";
    case MarginalClass::kNonDecreasing:
      return "nondecreasing";
    case MarginalClass::kBoth:
      return "both";
    case MarginalClass::kNeither:
      return "neither";
  }
  return "neither";
}

int GameInstance::TotalDemand() const {
  int total = 0;
  for (const Player& p : players) total += p.demand;
  return total;
}

bool GameInstance::IsUnweighted() const {
  for (const Player& p : players) {
    if (p.demand != 1) return false;
  }
  return true;
}

ResourceIndex GameInstance::FindResource(std::string_view id) const {
  for (int e = 0; e < num_resources(); ++e) {
    if (resources[e].id == id) return e;
  }
  throw InputError("unknown resource '" + std::string(id) + "'");
}

int GameInstance::FindPlayer(std::string_view id) const {
  for (int i = 0; i < num_players(); ++i) {
    if (players[i].id == id) return i;
  }
  throw InputError("unknown player '" + std::string(id) + "'");
}

void GameInstance::Validate() const {
  if (players.empty()) throw InputError("instance has no players");
  std::set<std::string> seen;
  for (const Resource& r : resources) {
    if (!seen.insert(r.id).second) {
      throw InputError("duplicate resource id '" + r.id + "'");
    }
  }
  seen.clear();
  for (const Player& p : players) {
    if (!seen.insert(p.id).second) {
      throw InputError("duplicate player id '" + p.id + "'");
    }
    if (p.demand < 1) {
      throw InputError("player '" + p.id + "' has non-positive demand");
    }
  }
  const int total = TotalDemand();
  for (const Resource& r : resources) {
    if (r.cost.max_load() < total) {
      throw InputError("cost table of '" + r.id + "' stops at load " +
                       std::to_string(r.cost.max_load()) +
                       " below the total demand " + std::to_string(total));
    }
  }
  if (network) {
    std::set<ResourceIndex> bound;
    for (const Arc& arc : network->arcs) {
      if (arc.from < 0 || arc.from >= network->num_nodes() || arc.to < 0 ||
          arc.to >= network->num_nodes()) {
        throw InputError("arc endpoint outside the node list");
      }
      if (arc.resource < 0 || arc.resource >= num_resources()) {
        throw InputError("arc bound to unknown resource");
      }
      if (!bound.insert(arc.resource).second) {
        throw InputError("resource '" + resources[arc.resource].id +
                         "' bound to two arcs");
      }
    }
  }
  for (const Player& p : players) ValidateSpace(*this, p);
}

PaymentMatrix::PaymentMatrix(int num_players, int num_resources)
    : num_players_(num_players),
      num_resources_(num_resources),
      entries_(static_cast<std::size_t>(num_players) * num_resources) {}

const Rational& PaymentMatrix::at(int player, ResourceIndex e) const {
  return entries_[static_cast<std::size_t>(player) * num_resources_ + e];
}

Rational& PaymentMatrix::at(int player, ResourceIndex e) {
  return entries_[static_cast<std::size_t>(player) * num_resources_ + e];
}

Rational PaymentMatrix::PlayerTotal(int player) const {
  Rational total;
  for (int e = 0; e < num_resources_; ++e) total += at(player, e);
  return total;
}

Rational PaymentMatrix::ResourceTotal(ResourceIndex e) const {
  Rational total;
  for (int i = 0; i < num_players_; ++i) total += at(i, e);
  return total;
}

int Load(const GameInstance& game, const ConfigurationProfile& profile,
         ResourceIndex e) {
  if (e < 0 || e >= game.num_resources()) {
    throw InputError("unknown resource index " + std::to_string(e));
  }
  int load = 0;
  for (int i = 0; i < static_cast<int>(profile.size()); ++i) {
    if (profile[i].Contains(e)) load += game.players[i].demand;
  }
  return load;
}

std::vector<int> Loads(const GameInstance& game,
                       const ConfigurationProfile& profile) {
  std::vector<int> loads(game.num_resources(), 0);
  for (int i = 0; i < static_cast<int>(profile.size()); ++i) {
    for (ResourceIndex e : profile[i]) {
      if (e < 0 || e >= game.num_resources()) {
        throw InputError("unknown resource index " + std::to_string(e));
      }
      loads[e] += game.players[i].demand;
    }
  }
  return loads;
}

Rational SocialCost(const GameInstance& game,
                    const ConfigurationProfile& profile) {
  const std::vector<int> loads = Loads(game, profile);
  Rational total;
  for (int e = 0; e < game.num_resources(); ++e) {
    total += game.resources[e].cost(loads[e]);
  }
  return total;
}

bool IsBought(const GameInstance& game, const StrategyProfile& sp,
              ResourceIndex e) {
  return sp.payments.ResourceTotal(e) >=
         game.resources[e].cost(Load(game, sp.config, e));
}

PrivateCost ComputePrivateCost(const GameInstance& game,
                               const StrategyProfile& sp, int player) {
  for (ResourceIndex e : sp.config[player]) {
    if (!IsBought(game, sp, e)) return PrivateCost::Infinite();
  }
  return PrivateCost::Finite(sp.payments.PlayerTotal(player));
}

bool IsStrategy(const GameInstance& game, int player,
                const ElementSet& config) {
  return std::visit(
      Overloaded{
          [&](const Matroid& m) { return m.IsBasis(config); },
          [&](const ExplicitAntichain& a) {
            for (const ElementSet& s : a.sets) {
              if (s == config) return true;
            }
            return false;
          },
          [&](const NetworkTerminals& t) {
            return IsSimplePath(*game.network, t.source, t.target, config);
          },
      },
      game.players[player].strategy);
}

void ValidateProfile(const GameInstance& game,
                     const ConfigurationProfile& profile) {
  if (static_cast<int>(profile.size()) != game.num_players()) {
    throw InputError("profile has " + std::to_string(profile.size()) +
                     " configurations for " +
                     std::to_string(game.num_players()) + " players");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    CheckElements(game, profile[i], "profile");
    if (!IsStrategy(game, i, profile[i])) {
      std::ostringstream os;
      os << "configuration " << profile[i] << " is not a strategy of player '"
         << game.players[i].id << "'";
      throw InputError(os.str());
    }
  }
}

void ValidateStrategyProfile(const GameInstance& game,
                             const StrategyProfile& sp) {
  ValidateProfile(game, sp.config);
  if (sp.payments.num_players() != game.num_players() ||
      sp.payments.num_resources() != game.num_resources()) {
    throw InputError("payment matrix has the wrong shape");
  }
  for (int i = 0; i < game.num_players(); ++i) {
    for (int e = 0; e < game.num_resources(); ++e) {
      const Rational& p = sp.payments.at(i, e);
      if (p < 0) {
        throw InputError("negative payment by '" + game.players[i].id +
                         "' on '" + game.resources[e].id + "'");
      }
      if (!p.IsZero() && !sp.config[i].Contains(e)) {
        throw InputError("player '" + game.players[i].id +
                         "' pays for unused resource '" +
                         game.resources[e].id + "'");
      }
    }
  }
}

}  // namespace rbg
