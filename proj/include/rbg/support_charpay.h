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

// Supportability of basis profiles in matroid games with arbitrary demands.
//
// For a profile B, a resource e is "fixed" if it is a coloop of some
// player's matroid. For every other resource e and every user i of e,
// Delta_i^e(B) is the cheapest marginal cost player i would cause by
// exchanging e for some f in its exchange set:
//   Delta_i^e(B) = min_f c_f(l_f(B) + d_i) - c_f(l_f(B)).
// B can be supported by payments iff every non-fixed e satisfies
//   c_e(l_e(B)) <= sum over users i of Delta_i^e(B).

#ifndef RBG_SUPPORT_CHARPAY_H_
#define RBG_SUPPORT_CHARPAY_H_

#include <optional>
#include <vector>

#include "rbg/game.h"
#include "rbg/strategies.h"

namespace rbg {

struct FixedSet {
  ElementSet elements;
  // Smallest player id with the resource as a coloop, or -1.
  std::vector<int> witness;
};

// Throws InputError unless every strategy space is a matroid.
FixedSet FixedElements(const GameInstance& game);

struct DeltaEntry {
  int player = 0;
  ResourceIndex resource = 0;
  Rational delta;
  // Minimizing exchange partner, smallest index on ties.
  ResourceIndex partner = 0;
};

struct DeltaTable {
  FixedSet fixed;
  // Sorted by (resource, player).
  std::vector<DeltaEntry> entries;

  const DeltaEntry* Find(int player, ResourceIndex e) const;
};

// Throws InputError if a space is not a matroid or some B_i is not a basis.
DeltaTable ComputeDeltaTable(const GameInstance& game,
                             const ConfigurationProfile& profile);

// Per resource: sum of deltas minus c_e(l_e(B)); nullopt for fixed resources.
std::vector<std::optional<Rational>> SupportSlack(const GameInstance& game,
                                                  const ConfigurationProfile&
                                                      profile,
                                                  const DeltaTable& table);

bool CheckSupportableMatroid(const GameInstance& game,
                             const ConfigurationProfile& profile);

// Fixed resources are paid in full by their witness. Every other resource is
// split in proportion to the users' deltas, or paid by nobody when all
// deltas vanish. Throws PreconditionError if the profile is not supportable.
PaymentMatrix ConstructPayments(const GameInstance& game,
                                const ConfigurationProfile& profile);

// First profile of minimum social cost in enumeration order. Works for any
// strategy spaces.
ConfigurationProfile SocialOptimumBruteforce(
    const GameInstance& game, std::size_t max_profiles = kDefaultProfileLimit);

// Social optimum with proportional payments. Requires matroid spaces and
// marginally non-increasing costs (UnsupportedClassError otherwise). An
// optimum that fails the support condition raises InvariantViolation.
StrategyProfile SolveWeightedMatroid(
    const GameInstance& game, std::size_t max_profiles = kDefaultProfileLimit);

}  // namespace rbg

#endif  // RBG_SUPPORT_CHARPAY_H_
