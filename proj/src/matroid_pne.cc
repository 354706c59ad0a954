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

#include "rbg/matroid_pne.h"

#include <optional>
#include <utility>

#include "rbg/errors.h"
#include "rbg/matroid.h"
#include "rbg/strategies.h"

namespace rbg {

MatroidPneResult SolveUnweightedMatroid(const GameInstance& game,
                                        bool keep_trace) {
  if (!game.IsUnweighted()) {
    throw UnsupportedClassError("the cut algorithm needs unit demands");
  }
  std::vector<PlayerView> views;
  for (int i = 0; i < game.num_players(); ++i) {
    std::optional<Matroid> m = AsMatroid(game.players[i].strategy);
    if (!m) {
      throw UnsupportedClassError("player '" + game.players[i].id +
                                  "' does not have a matroid space");
    }
    if (m->FullRank() > 0) views.push_back({i, MatroidView(std::move(*m))});
  }
  for (const Resource& r : game.resources) {
    if (!IsMarginallyNonIncreasing(ClassifyMarginal(r.cost))) {
      throw UnsupportedClassError("resource '" + r.id +
                                  "' is not marginally non-increasing");
    }
  }

  const int m = game.num_resources();
  // times_bought[e] counts purchases; marginal[e] is the next buyer's price.
  std::vector<int> times_bought(m, 0);
  std::vector<Rational> marginal(m);
  for (int e = 0; e < m; ++e) marginal[e] = game.resources[e].cost(1);

  MatroidPneResult result;
  result.profile.config.assign(game.num_players(), ElementSet());
  result.profile.payments = PaymentMatrix(game.num_players(), m);
  std::optional<Rational> previous_weight;
  for (int k = 1; !views.empty(); ++k) {
    std::optional<CutCertificate> cert = MaxBottleneckMinCut(views, marginal);
    if (!cert) throw InvariantViolation("active players without cuts");
    if (previous_weight && cert->bottleneck_weight > *previous_weight) {
      throw InvariantViolation("bottleneck weight increased at iteration " +
                               std::to_string(k));
    }
    previous_weight = cert->bottleneck_weight;

    const ResourceIndex e = cert->bottleneck;
    const int owner = cert->owner;
    result.profile.payments.at(owner, e) = marginal[e];
    result.profile.config[owner].Insert(e);
    ++times_bought[e];
    const CostFunction& cost = game.resources[e].cost;
    if (result.profile.payments.ResourceTotal(e) != cost(times_bought[e])) {
      throw InvariantViolation("payments on '" + game.resources[e].id +
                               "' do not match its cost");
    }
    // Once every player holds e nobody can buy it again.
    marginal[e] = times_bought[e] < cost.max_load()
                      ? cost.Marginal(times_bought[e], 1)
                      : Rational(0);

    AlgorithmIteration iteration;
    if (keep_trace) {
      iteration = {k,         cert->cut,    e, owner, cert->bottleneck_weight,
                   cert->bottleneck_weight, marginal[e], {}};
    }
    const ElementSet rest = cert->cut.Without(e);
    std::vector<PlayerView> next;
    for (PlayerView& pv : views) {
      MatroidView view = std::move(pv.view);
      if (pv.player == owner) {
        view = view.Contract(e);
        if (view.FullRank() == 0) {
          if (keep_trace) iteration.dropped.push_back(owner);
          continue;
        }
      }
      const int rank = view.FullRank();
      view = view.Delete(rest.Intersect(view.ground()));
      if (view.FullRank() != rank) {
        throw InvariantViolation("deleting the cut left player '" +
                                 game.players[pv.player].id +
                                 "' without a basis");
      }
      next.push_back({pv.player, std::move(view)});
    }
    views = std::move(next);
    if (keep_trace) result.trace.iterations.push_back(std::move(iteration));
  }
  return result;
}

}  // namespace rbg
