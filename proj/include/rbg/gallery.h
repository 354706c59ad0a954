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

// Named instances without pure equilibria.

#ifndef RBG_GALLERY_H_
#define RBG_GALLERY_H_

#include <span>
#include <string>
#include <vector>

#include "rbg/game.h"

namespace rbg {

// Three unit players choosing one of two machines e, f whose costs are
// (0, 1, 1, big_m) by load.
GameInstance Fig1a(const Rational& big_m = 100);

// Two players connecting opposite corners of a four-edge cycle a, b, c, d
// with unit fixed costs; each pair of paths shares exactly one edge.
GameInstance DiamondConnection();

// Sets X, Y of the family and elements a, b, c of X u Y such that every
// member of the family inside (X u Y) - a contains both b and c.
struct AntichainWitness {
  ElementSet x_set;
  ElementSet y_set;
  ResourceIndex a = 0;
  ResourceIndex b = 0;
  ResourceIndex c = 0;
};

// Takes a violated exchange (X, Y, x) with |Y \ X| minimal (first in scan
// order). If |Y \ X| = 1, a is its element and b, c are the two smallest of
// X \ Y; otherwise a = x and b, c are the two smallest of Y \ X. Throws
// InputError if the family is not an antichain or satisfies basis exchange.
AntichainWitness NonmatroidWitness(std::span<const ElementSet> family);

// A family over string labels, indexed by order of first appearance.
struct LabeledFamily {
  std::vector<std::string> labels;
  std::vector<ElementSet> sets;
};
LabeledFamily IndexFamily(const std::vector<std::vector<std::string>>& family);

struct NoPneOptions {
  Rational big_m = 100;
  // Replace big_m by ceil(1 + sum of the largest other costs).
  bool safe_m = false;
};

// Two players with demands 5 and 4, each with a copy of the family. The
// copies share exactly x, y, z, glued as x = a1 = b2, y = a2 = b1,
// z = c1 = c2, with c_x(t) = t, c_y = 11/2 and c_z = 4 once used. Other
// elements of X u Y are free; the rest cost big_m. Resources are x, y, z,
// then player 1's own elements ("1:<label>"), then player 2's ("2:<label>").
GameInstance BuildNoPneGame(
    const std::vector<std::vector<std::string>>& family,
    const NoPneOptions& options = {});

}  // namespace rbg

#endif  // RBG_GALLERY_H_
