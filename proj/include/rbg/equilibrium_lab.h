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

// Exact equilibrium auditing: best responses against fixed opponent
// payments, PNE verification, payment supportability of a fixed
// configuration profile, and exhaustive PNE existence.

#ifndef RBG_EQUILIBRIUM_LAB_H_
#define RBG_EQUILIBRIUM_LAB_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "rbg/fourier_motzkin.h"
#include "rbg/game.h"
#include "rbg/strategies.h"

namespace rbg {

struct BestResponse {
  ElementSet config;
  Rational cost;
};

// What player i must add to get resource e bought if it uses e while the
// others keep their strategies: max(0, c_e(l_{-i}(e) + d_i) - sum_{j != i}
// p_j^e). A deviation's price is additive over these weights.
std::vector<Rational> ResidualWeights(const GameInstance& game,
                                      const StrategyProfile& sp, int player);

// Exact minimum deviation price over the whole strategy space: enumeration
// for antichains and matroids (first minimum in lexicographic order),
// shortest path for networks. Deviations follow private-cost semantics
// literally: only the deviator's own configuration has to be bought.
BestResponse ComputeBestResponse(const GameInstance& game,
                                 const StrategyProfile& sp, int player);

struct PlayerAudit {
  PrivateCost current_cost = PrivateCost::Infinite();
  Rational best_response_cost;
  ElementSet best_response;
  bool violation = false;
};

struct VerificationReport {
  std::vector<PlayerAudit> players;
  bool is_pne = false;
};

enum class VerifyMode {
  // Exchange path when every space is a matroid, general path otherwise.
  kAuto,
  kGeneral,
  // Single-exchange optimality of the chosen basis under residual weights.
  // Requires matroid spaces.
  kMatroidExchange,
};

VerificationReport VerifyPne(const GameInstance& game,
                             const StrategyProfile& sp,
                             VerifyMode mode = VerifyMode::kAuto);

struct SupportLimits {
  int max_players = 3;
  std::size_t max_strategies_per_player = 6;
  int max_resources = 10;
  FourierMotzkinLimits fourier_motzkin;
};

struct SupportabilityResult {
  std::optional<PaymentMatrix> payments;  // set iff feasible
  // Linear systems decided; one per profile (see Supportable).
  std::size_t exhausted_disjuncts = 0;
  std::size_t num_constraints = 0;
};

// Decides whether payments exist that make `profile` a PNE.
//
// Payments are normalized to cover each used resource exactly: a strict
// overpayment lets some payer lower its own contribution, so no equilibrium
// is lost. Under that normalization every deviation term
// max(0, c_e(l'_e) - q_e) is either constant (e not in S_i: q_e is the full
// cost c_e(l_e)) or equals p_i^e >= 0 (e in S_i), so each deviation
// constraint collapses to the single linear inequality
//   sum_{e in S_i \ S'} p_i^e
//       <= sum_{e in S' \ S_i} (c_e(l_e + d_i) - c_e(l_e))
// and the whole question is one exact Fourier-Motzkin feasibility problem.
SupportabilityResult Supportable(const GameInstance& game,
                                 const ConfigurationProfile& profile,
                                 const SupportLimits& limits = {});

struct ExistenceResult {
  bool exists = false;
  std::optional<StrategyProfile> witness;
  std::size_t profiles_checked = 0;
};

// First supportable profile in lexicographic order, re-verified.
ExistenceResult PneExistsExhaustive(const GameInstance& game,
                                    const SupportLimits& limits = {},
                                    std::size_t max_profiles =
                                        kDefaultProfileLimit);

}  // namespace rbg

#endif  // RBG_EQUILIBRIUM_LAB_H_
