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

// Cut-based equilibrium construction for unit-demand matroid games with
// marginally non-increasing costs.
//
// Every player starts with its full matroid and an empty independent set.
// Each iteration picks, over all active players, an inclusion-minimal cut of
// the player's current minor whose cheapest element (under the current
// marginal prices c'_e) is as expensive as possible. The owner buys that
// bottleneck element at price c'_e, the element is contracted in the owner's
// minor, and the rest of the cut is deleted from every active minor. A
// player leaves once its set is a basis.

#ifndef RBG_MATROID_PNE_H_
#define RBG_MATROID_PNE_H_

#include <vector>

#include "rbg/game.h"

namespace rbg {

struct AlgorithmIteration {
  int k = 0;
  ElementSet cut;
  ResourceIndex bottleneck = 0;
  int player = 0;
  Rational bottleneck_weight;
  Rational payment;
  // c'_e of the bottleneck after the purchase.
  Rational next_marginal;
  std::vector<int> dropped;
};

struct AlgorithmTrace {
  std::vector<AlgorithmIteration> iterations;
};

struct MatroidPneResult {
  StrategyProfile profile;
  AlgorithmTrace trace;  // empty unless requested
};

// Throws UnsupportedClassError for weighted demands, non-matroid spaces, or
// costs that are not marginally non-increasing. Throws InvariantViolation if
// the bottleneck weights ever increase, budget balance breaks, or a deletion
// destroys a remaining player's bases.
MatroidPneResult SolveUnweightedMatroid(const GameInstance& game,
                                        bool keep_trace = false);

}  // namespace rbg

#endif  // RBG_MATROID_PNE_H_
