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

#ifndef RBG_NETWORK_H_
#define RBG_NETWORK_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbg/element_set.h"
#include "rbg/rational.h"

namespace rbg {

// Directed arc bound to a resource. Distinct arcs bind distinct resources,
// so a path is identified with the resource set of its arcs.
struct Arc {
  int from = 0;
  int to = 0;
  ResourceIndex resource = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Network {
  std::vector<std::string> nodes;
  std::vector<Arc> arcs;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  friend bool operator==(const Network&, const Network&) = default;
};

// True iff `resources` are exactly the arcs of a simple source->target path.
bool IsSimplePath(const Network& net, int source, int target,
                  const ElementSet& resources);

bool IsReachable(const Network& net, int source, int target);

// Minimum-weight simple source->target path under non-negative per-resource
// weights, returned as its resource set. Among minimum-weight paths the one
// with the lexicographically smallest node sequence wins (parallel arcs: the
// smallest arc index). Returns nullopt if target is unreachable.
//
// Non-negative weights make a minimum walk into a simple path, so the greedy
// walk below only needs shortest distances in the graph with the visited
// prefix removed.
std::optional<ElementSet> LexMinWeightPath(const Network& net, int source,
                                           int target,
                                           std::span<const Rational> weights);

// All simple source->target paths as resource sets, in lexicographic order of
// node sequences. Throws CapacityError beyond `limit` paths.
std::vector<ElementSet> EnumerateSimplePaths(const Network& net, int source,
                                             int target, std::size_t limit);

}  // namespace rbg

#endif  // RBG_NETWORK_H_
