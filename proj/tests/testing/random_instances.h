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

// Seeded generators of small random instances for property tests.

#ifndef RBG_TESTING_RANDOM_INSTANCES_H_
#define RBG_TESTING_RANDOM_INSTANCES_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rbg/game.h"

namespace rbg::testing {

using Rng = std::mt19937_64;

// Inclusive range.
int RandomInt(Rng& rng, int lo, int hi);
bool Coin(Rng& rng, double p = 0.5);
ElementSet RandomSubset(Rng& rng, int universe, int min_size, int max_size);

// Tables on 0..max_load. Values of the non-increasing family stay <= max_value.
CostFunction RandomNonIncreasingCost(Rng& rng, int max_load,
                                     int max_value = 100);
CostFunction RandomNonDecreasingCost(Rng& rng, int max_load, int max_step = 6);
CostFunction RandomMonotoneCost(Rng& rng, int max_load, int max_value = 20);

enum class CostFamily { kNonIncreasing, kNonDecreasing, kMonotone };
CostFunction RandomCost(Rng& rng, CostFamily family, int max_load);

Matroid RandomGraphicMatroid(Rng& rng, const ElementSet& elements,
                             int max_nodes = 6);
// Uniform, partition (total rank <= max_rank), graphic, free (small grounds)
// or explicit bases of one of those.
Matroid RandomMatroid(Rng& rng, const ElementSet& ground, int max_rank = 3);

// A random matroid on `ground_size` elements drawn from 0..universe-1, then
// a random sequence of contractions (of non-loops) and deletions that keeps
// the ground non-empty.
MatroidView RandomMatroidView(Rng& rng, int universe, int ground_size);

// Unit demands, <= 5 players, <= 8 resources, non-increasing tables <= 100.
GameInstance RandomUnweightedMatroidGame(std::uint64_t seed);

// <= 3 players with demands 1..3, <= 6 bases each, <= 8 resources. The
// structure depends on the seed only; `family` only changes the costs.
GameInstance RandomWeightedMatroidGame(std::uint64_t seed, CostFamily family);

// <= 8 nodes, <= 14 arcs, <= 5 players with demands 1..4, convex costs.
GameInstance RandomNetworkGame(std::uint64_t seed);

// Ground <= 5 labels "1".."5", <= 4 sets; fails basis exchange.
std::vector<std::vector<std::string>> RandomNonMatroidAntichain(
    std::uint64_t seed);

}  // namespace rbg::testing

#endif  // RBG_TESTING_RANDOM_INSTANCES_H_
