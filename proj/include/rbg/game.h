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

// Resource buying games: players jointly buy resources whose load-dependent
// cost must be covered in full by payments before the resource is available.
// Everything here is exact; no floating point is involved.

#ifndef RBG_GAME_H_
#define RBG_GAME_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rbg/element_set.h"
#include "rbg/matroid.h"
#include "rbg/network.h"
#include "rbg/rational.h"

namespace rbg {

// Cost of a resource tabulated over integer loads 0..max_load. Normalized
// (c(0) = 0) and non-decreasing.
class CostFunction {
 public:
  explicit CostFunction(std::vector<Rational> values);
  static CostFunction Linear(const Rational& slope, int max_load);
  // c(0) = 0 and c(l) = cost for l >= 1.
  static CostFunction Fixed(const Rational& cost, int max_load);

  // Throws InputError for loads outside 0..max_load.
  const Rational& operator()(int load) const;
  int max_load() const { return static_cast<int>(values_.size()) - 1; }
  const std::vector<Rational>& values() const { return values_; }

  // c(load + step) - c(load).
  Rational Marginal(int load, int step) const;

  friend bool operator==(const CostFunction&, const CostFunction&) = default;

 private:
  std::vector<Rational> values_;
};

enum class MarginalClass { kNonIncreasing, kNonDecreasing, kBoth, kNeither };

// Unit steps suffice: on the integer grid, c(x+d) - c(x) is a sum of d unit
// differences, so monotone unit differences give the inequality for every
// step d and every x <= y by telescoping, and d = 1 is a special case of
// the general statement.
MarginalClass ClassifyMarginal(const CostFunction& c);
std::string_view ToString(MarginalClass mc);
inline bool IsMarginallyNonIncreasing(MarginalClass mc) {
  return mc == MarginalClass::kNonIncreasing || mc == MarginalClass::kBoth;
}
inline bool IsMarginallyNonDecreasing(MarginalClass mc) {
  return mc == MarginalClass::kNonDecreasing || mc == MarginalClass::kBoth;
}

struct Resource {
  std::string id;
  CostFunction cost;
  friend bool operator==(const Resource&, const Resource&) = default;
};

// Arbitrary family of pairwise incomparable, non-empty configurations.
struct ExplicitAntichain {
  std::vector<ElementSet> sets;
  friend bool operator==(const ExplicitAntichain&,
                         const ExplicitAntichain&) = default;
};

// Configurations are the simple source->target paths of the instance network.
struct NetworkTerminals {
  int source = 0;
  int target = 0;
  friend bool operator==(const NetworkTerminals&,
                         const NetworkTerminals&) = default;
};

using StrategySpace =
    std::variant<Matroid, ExplicitAntichain, NetworkTerminals>;

struct Player {
  std::string id;
  int demand = 1;
  StrategySpace strategy;
  friend bool operator==(const Player&, const Player&) = default;
};

struct GameInstance {
  std::vector<Player> players;
  std::vector<Resource> resources;
  std::optional<Network> network;

  int num_players() const { return static_cast<int>(players.size()); }
  int num_resources() const { return static_cast<int>(resources.size()); }
  int TotalDemand() const;
  bool IsUnweighted() const;

  // Throw InputError for unknown ids.
  ResourceIndex FindResource(std::string_view id) const;
  int FindPlayer(std::string_view id) const;

  // Checks every structural invariant; throws InputError on the first
  // violation found.
  void Validate() const;

  friend bool operator==(const GameInstance&, const GameInstance&) = default;
};

// One chosen configuration per player.
using ConfigurationProfile = std::vector<ElementSet>;

// payments.at(i, e) is what player i contributes towards resource e.
class PaymentMatrix {
 public:
  PaymentMatrix() = default;
  PaymentMatrix(int num_players, int num_resources);

  const Rational& at(int player, ResourceIndex e) const;
  Rational& at(int player, ResourceIndex e);
  Rational PlayerTotal(int player) const;
  Rational ResourceTotal(ResourceIndex e) const;
  int num_players() const { return num_players_; }
  int num_resources() const { return num_resources_; }

  friend bool operator==(const PaymentMatrix&, const PaymentMatrix&) = default;

 private:
  int num_players_ = 0;
  int num_resources_ = 0;
  std::vector<Rational> entries_;
};

struct StrategyProfile {
  ConfigurationProfile config;
  PaymentMatrix payments;
};

// Either a finite exact amount or the "configuration not bought" marker.
class PrivateCost {
 public:
  static PrivateCost Infinite() { return PrivateCost(); }
  static PrivateCost Finite(Rational value) {
    PrivateCost c;
    c.value_ = std::move(value);
    return c;
  }
  bool is_infinite() const { return !value_.has_value(); }
  // Precondition: finite.
  const Rational& value() const { return *value_; }
  std::string ToString() const {
    return value_ ? value_->ToString() : std::string("inf");
  }
  friend bool operator==(const PrivateCost&, const PrivateCost&) = default;
  friend bool operator<(const PrivateCost& a, const PrivateCost& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.value_ < *b.value_;
  }

 private:
  PrivateCost() = default;
  std::optional<Rational> value_;
};

int Load(const GameInstance& game, const ConfigurationProfile& profile,
         ResourceIndex e);
std::vector<int> Loads(const GameInstance& game,
                       const ConfigurationProfile& profile);
Rational SocialCost(const GameInstance& game,
                    const ConfigurationProfile& profile);

// Total payments cover c_e(load).
bool IsBought(const GameInstance& game, const StrategyProfile& sp,
              ResourceIndex e);
PrivateCost ComputePrivateCost(const GameInstance& game,
                               const StrategyProfile& sp, int player);

// Membership of `config` in the player's strategy space.
bool IsStrategy(const GameInstance& game, int player, const ElementSet& config);

// Throw InputError when the profile or payments break their invariants.
void ValidateProfile(const GameInstance& game,
                     const ConfigurationProfile& profile);
void ValidateStrategyProfile(const GameInstance& game,
                             const StrategyProfile& sp);

}  // namespace rbg

#endif  // RBG_GAME_H_
