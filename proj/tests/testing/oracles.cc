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

#include "testing/oracles.h"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "rbg/strategies.h"

namespace rbg::testing {
namespace {

std::vector<ElementSet> AllSubsets(const ElementSet& s) {
  std::vector<ElementSet> out;
  const int n = s.size();
  for (int mask = 0; mask < (1 << n); ++mask) {
    ElementSet x;
    for (int k = 0; k < n; ++k) {
      if (mask >> k & 1) x.Insert(s[k]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

bool HasCycle(const Matroid& m, const ElementSet& x) {
  const int n = static_cast<int>(m.nodes().size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (node, edge id)
  int id = 0;
  for (const GraphicEdge& e : m.edges()) {
    if (x.Contains(e.element)) {
      if (e.tail == e.head) return true;
      adj[e.tail].push_back({e.head, id});
      adj[e.head].push_back({e.tail, id});
    }
    ++id;
  }
  std::vector<bool> seen(n, false);
  std::function<bool(int, int)> dfs = [&](int u, int via) {
    seen[u] = true;
    for (auto [v, edge] : adj[u]) {
      if (edge == via) continue;
      if (seen[v] || dfs(v, edge)) return true;
    }
    return false;
  };
  for (int u = 0; u < n; ++u) {
    if (!seen[u] && dfs(u, -1)) return true;
  }
  return false;
}

// Unique solution of rows (a, b) read as equalities, if any.
std::optional<std::vector<Rational>> SolveUnique(
    std::vector<std::pair<std::vector<Rational>, Rational>> rows, int n) {
  int r = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int k = r; k < static_cast<int>(rows.size()); ++k) {
      if (!rows[k].first[c].IsZero()) {
        p = k;
        break;
      }
    }
    if (p < 0) return std::nullopt;
    std::swap(rows[r], rows[p]);
    for (int k = 0; k < static_cast<int>(rows.size()); ++k) {
      if (k == r || rows[k].first[c].IsZero()) continue;
      Rational f = rows[k].first[c] / rows[r].first[c];
      for (int j = 0; j < n; ++j) rows[k].first[j] -= f * rows[r].first[j];
      rows[k].second -= f * rows[r].second;
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (int k = r; k < static_cast<int>(rows.size()); ++k) {
    if (!rows[k].second.IsZero()) return std::nullopt;
  }
  std::vector<Rational> x(n);
  for (int k = 0; k < n; ++k) x[k] = rows[k].second / rows[k].first[k];
  return x;
}

}  // namespace

bool BruteIndependent(const Matroid& m, const ElementSet& x) {
  if (!x.IsSubsetOf(m.ground())) return false;
  switch (m.kind()) {
    case Matroid::Kind::kUniform:
      return x.size() <= m.uniform_rank();
    case Matroid::Kind::kPartition:
      for (const PartitionBlock& b : m.blocks()) {
        if (x.Intersect(b.elements).size() > b.capacity) return false;
      }
      return true;
    case Matroid::Kind::kGraphic:
      return !HasCycle(m, x);
    case Matroid::Kind::kFree:
      return true;
    case Matroid::Kind::kExplicitBases:
      for (const ElementSet& b : m.bases()) {
        if (x.IsSubsetOf(b)) return true;
      }
      return false;
  }
  return false;
}

BruteViewOracle::BruteViewOracle(const MatroidView& v)
    : view_(v), universe_(v.base().ground().elements()) {
  const int n = static_cast<int>(universe_.size());
  rank_.assign(std::size_t{1} << n, 0);
  for (unsigned mask = 1; mask < rank_.size(); ++mask) {
    ElementSet x;
    for (int k = 0; k < n; ++k) {
      if (mask >> k & 1) x.Insert(universe_[k]);
    }
    if (BruteIndependent(v.base(), x)) {
      rank_[mask] = x.size();
      continue;
    }
    for (int k = 0; k < n; ++k) {
      if (mask >> k & 1) {
        rank_[mask] = std::max(rank_[mask], rank_[mask ^ (1u << k)]);
      }
    }
  }
}

unsigned BruteViewOracle::Mask(const ElementSet& x) const {
  unsigned mask = 0;
  for (ResourceIndex e : x) {
    auto it = std::lower_bound(universe_.begin(), universe_.end(), e);
    mask |= 1u << (it - universe_.begin());
  }
  return mask;
}

int BruteViewOracle::Rank(const ElementSet& x) const {
  const unsigned t = Mask(view_.contracted());
  return rank_[Mask(x) | t] - rank_[t];
}

std::vector<ElementSet> BruteViewOracle::Bases() const {
  const int r = Rank(view_.ground());
  std::vector<ElementSet> out;
  for (const ElementSet& b : AllSubsets(view_.ground())) {
    if (b.size() == r && Rank(b) == r) out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool BruteViewOracle::IsCut(const ElementSet& c) const {
  return Rank(view_.ground().Minus(c)) < Rank(view_.ground());
}

int BruteRank(const Matroid& m, const ElementSet& x) {
  return BruteViewOracle(MatroidView(m)).Rank(x);
}

int BruteViewRank(const MatroidView& v, const ElementSet& x) {
  return BruteViewOracle(v).Rank(x);
}

std::vector<ElementSet> BruteBases(const MatroidView& v) {
  return BruteViewOracle(v).Bases();
}

bool BruteIsCut(const MatroidView& v, const ElementSet& c) {
  return BruteViewOracle(v).IsCut(c);
}

std::optional<ExhaustiveCut> ExhaustiveMaxBottleneck(
    std::span<const PlayerView> views, std::span<const Rational> weights) {
  std::optional<ExhaustiveCut> best;
  auto lighter = [&](ResourceIndex a, ResourceIndex b) {
    return weights[a] != weights[b] ? weights[a] < weights[b] : a < b;
  };
  for (const PlayerView& pv : views) {
    const BruteViewOracle oracle(pv.view);
    for (const ElementSet& c : AllSubsets(pv.view.ground())) {
      if (c.empty() || !oracle.IsCut(c)) continue;
      bool minimal = true;
      for (ResourceIndex e : c) {
        if (oracle.IsCut(c.Without(e))) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      ResourceIndex low = c[0];
      for (ResourceIndex e : c) {
        if (lighter(e, low)) low = e;
      }
      if (!best || lighter(best->bottleneck, low)) {
        best = ExhaustiveCut{low, weights[low], {}};
      }
      if (best->bottleneck == low) best->optimal_cuts.push_back({pv.player, c});
    }
  }
  return best;
}

bool VertexFeasible(const LinearSystem& system) {
  const int n = system.num_vars();
  std::vector<std::pair<std::vector<Rational>, Rational>> equalities;
  std::vector<std::pair<std::vector<Rational>, Rational>> inequalities;
  for (const LinearConstraint& c : system.constraints()) {
    (c.relation == Relation::kEqual ? equalities : inequalities)
        .push_back({c.coefficients, c.rhs});
  }
  if (n == 0) return system.IsSatisfiedBy({});
  const int k = static_cast<int>(inequalities.size());
  // Subsets of tight inequalities, by bitmask; only up to n of them matter.
  for (long mask = 0; mask < (1L << k); ++mask) {
    if (__builtin_popcountl(mask) > n) continue;
    auto rows = equalities;
    for (int j = 0; j < k; ++j) {
      if (mask >> j & 1) rows.push_back(inequalities[j]);
    }
    auto x = SolveUnique(rows, n);
    if (x && system.IsSatisfiedBy(*x)) return true;
  }
  return false;
}

std::optional<bool> SupportableByDisjuncts(const GameInstance& game,
                                           const ConfigurationProfile& profile,
                                           std::size_t max_combinations) {
  std::map<std::pair<int, ResourceIndex>, int> var;
  for (int i = 0; i < game.num_players(); ++i) {
    for (ResourceIndex e : profile[i]) {
      const int next = static_cast<int>(var.size());
      var[{i, e}] = next;
    }
  }
  const int n = static_cast<int>(var.size());
  const std::vector<int> loads = Loads(game, profile);

  LinearSystem base(n);
  for (int k = 0; k < n; ++k) base.AddNonNegative(k);
  for (int e = 0; e < game.num_resources(); ++e) {
    if (loads[e] == 0) continue;
    std::vector<Rational> a(n);
    for (int i = 0; i < game.num_players(); ++i) {
      if (profile[i].Contains(e)) a[var.at({i, e})] = 1;
    }
    base.AddEqual(a, game.resources[e].cost(loads[e]));
  }

  // One entry per deviation: the player and the deviation's resources.
  struct Deviation {
    int player;
    ElementSet config;
  };
  std::vector<Deviation> deviations;
  std::size_t combinations = 1;
  for (int i = 0; i < game.num_players(); ++i) {
    for (const ElementSet& s : EnumerateStrategies(game, i)) {
      if (s == profile[i]) continue;
      deviations.push_back({i, s});
      combinations <<= s.size();
      if (combinations > max_combinations) return std::nullopt;
    }
  }

  std::vector<int> choice(deviations.size(), 0);
  while (true) {
    LinearSystem system = base;
    for (std::size_t d = 0; d < deviations.size(); ++d) {
      const int i = deviations[d].player;
      const int demand = game.players[i].demand;
      std::vector<Rational> a(n);
      Rational rhs;
      for (ResourceIndex e : profile[i]) a[var.at({i, e})] += 1;
      const ElementSet& s = deviations[d].config;
      for (int k = 0; k < s.size(); ++k) {
        if (!(choice[d] >> k & 1)) continue;
        const ResourceIndex e = s[k];
        const int others = loads[e] - (profile[i].Contains(e) ? demand : 0);
        rhs += game.resources[e].cost(others + demand);
        for (int j = 0; j < game.num_players(); ++j) {
          if (j != i && profile[j].Contains(e)) a[var.at({j, e})] += 1;
        }
      }
      system.AddLessEqual(std::move(a), std::move(rhs));
    }
    if (FindFeasiblePoint(system)) return true;
    std::size_t d = 0;
    while (d < deviations.size() &&
           choice[d] + 1 == (1 << deviations[d].config.size())) {
      choice[d] = 0;
      ++d;
    }
    if (d == deviations.size()) return false;
    ++choice[d];
  }
}

}  // namespace rbg::testing
