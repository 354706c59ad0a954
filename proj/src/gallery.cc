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

#include "rbg/gallery.h"

#include <algorithm>
#include <map>
#include <optional>
#include <utility>

#include "rbg/errors.h"
#include "rbg/matroid.h"

namespace rbg {
namespace {

bool InFamily(std::span<const ElementSet> family, const ElementSet& s) {
  return std::find(family.begin(), family.end(), s) != family.end();
}

}  // namespace

GameInstance Fig1a(const Rational& big_m) {
  GameInstance game;
  const CostFunction cost({0, 1, 1, big_m});
  game.resources = {{"e", cost}, {"f", cost}};
  for (const char* id : {"1", "2", "3"}) {
    game.players.push_back({id, 1, Matroid::Uniform(ElementSet{0, 1}, 1)});
  }
  game.Validate();
  return game;
}

GameInstance DiamondConnection() {
  GameInstance game;
  for (const char* id : {"a", "b", "c", "d"}) {
    game.resources.push_back({id, CostFunction::Fixed(1, 2)});
  }
  game.players.push_back(
      {"1", 1, ExplicitAntichain{{ElementSet{0, 3}, ElementSet{1, 2}}}});
  game.players.push_back(
      {"2", 1, ExplicitAntichain{{ElementSet{0, 1}, ElementSet{2, 3}}}});
  game.Validate();
  return game;
}

AntichainWitness NonmatroidWitness(std::span<const ElementSet> family) {
  if (family.empty()) throw InputError("empty family");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family[i].empty()) throw InputError("family contains the empty set");
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i != j && family[i].IsSubsetOf(family[j])) {
        throw InputError("family is not an antichain: " +
                         ToString(family[i]) + " lies in " +
                         ToString(family[j]));
      }
    }
  }
  if (!ValidateExplicitBases(family)) {
    throw InputError("family satisfies basis exchange");
  }

  std::optional<ExchangeViolation> best;
  int best_gap = 0;
  for (const ElementSet& x_set : family) {
    for (const ElementSet& y_set : family) {
      if (x_set == y_set) continue;
      const ElementSet y_only = y_set.Minus(x_set);
      if (best && y_only.size() >= best_gap) continue;
      for (ResourceIndex x : x_set.Minus(y_set)) {
        const ElementSet base = x_set.Without(x);
        bool violated = true;
        for (ResourceIndex y : y_only) {
          if (InFamily(family, base.With(y))) {
            violated = false;
            break;
          }
        }
        if (violated) {
          best = ExchangeViolation{x_set, y_set, x};
          best_gap = y_only.size();
          break;
        }
      }
    }
  }

  AntichainWitness w{best->x_set, best->y_set, 0, 0, 0};
  const ElementSet y_only = w.y_set.Minus(w.x_set);
  const ElementSet x_only = w.x_set.Minus(w.y_set);
  if (y_only.size() == 1) {
    w.a = y_only[0];
    w.b = x_only[0];
    w.c = x_only[1];
  } else {
    w.a = best->element;
    w.b = y_only[0];
    w.c = y_only[1];
  }
  const ElementSet region = w.x_set.Union(w.y_set).Without(w.a);
  for (const ElementSet& z : family) {
    if (z.IsSubsetOf(region) && !(z.Contains(w.b) && z.Contains(w.c))) {
      throw InvariantViolation("witness fails on " + ToString(z));
    }
  }
  return w;
}

LabeledFamily IndexFamily(
    const std::vector<std::vector<std::string>>& family) {
  LabeledFamily out;
  std::map<std::string, ResourceIndex> index;
  for (const auto& set : family) {
    ElementSet s;
    for (const std::string& label : set) {
      auto [it, inserted] =
          index.emplace(label, static_cast<ResourceIndex>(out.labels.size()));
      if (inserted) out.labels.push_back(label);
      s.Insert(it->second);
    }
    out.sets.push_back(std::move(s));
  }
  return out;
}

GameInstance BuildNoPneGame(
    const std::vector<std::vector<std::string>>& family,
    const NoPneOptions& options) {
  const LabeledFamily lf = IndexFamily(family);
  const AntichainWitness w = NonmatroidWitness(lf.sets);
  const ElementSet cheap = w.x_set.Union(w.y_set);
  constexpr int kX = 0, kY = 1, kZ = 2;
  const int total_demand = 9;

  Rational big_m = options.big_m;
  if (options.safe_m) {
    big_m = (Rational(1) + total_demand + Rational(11, 2) + 4).Ceil();
  }

  GameInstance game;
  game.resources = {
      {"x", CostFunction::Linear(1, total_demand)},
      {"y", CostFunction::Fixed(Rational(11, 2), total_demand)},
      {"z", CostFunction::Fixed(4, total_demand)},
  };
  // Player p maps a -> shared[0], b -> shared[1], c -> z.
  const int shared[2][2] = {{kX, kY}, {kY, kX}};
  for (int p = 0; p < 2; ++p) {
    std::vector<ResourceIndex> image(lf.labels.size());
    for (ResourceIndex e = 0; e < static_cast<int>(lf.labels.size()); ++e) {
      if (e == w.a) {
        image[e] = shared[p][0];
      } else if (e == w.b) {
        image[e] = shared[p][1];
      } else if (e == w.c) {
        image[e] = kZ;
      } else {
        image[e] = game.num_resources();
        game.resources.push_back(
            {std::to_string(p + 1) + ":" + lf.labels[e],
             CostFunction::Fixed(cheap.Contains(e) ? Rational(0) : big_m,
                                 total_demand)});
      }
    }
    ExplicitAntichain space;
    for (const ElementSet& s : lf.sets) {
      ElementSet mapped;
      for (ResourceIndex e : s) mapped.Insert(image[e]);
      space.sets.push_back(std::move(mapped));
    }
    game.players.push_back({std::to_string(p + 1), p == 0 ? 5 : 4,
                            std::move(space)});
  }
  game.Validate();
  return game;
}

}  // namespace rbg
