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

#include "rbg/network.h"

#include <algorithm>
#include <functional>

#include "rbg/errors.h"

namespace rbg {
namespace {

// Out-arcs of every node, sorted by (head node, arc index).
std::vector<std::vector<int>> SortedOutArcs(const Network& net) {
  std::vector<std::vector<int>> out(net.num_nodes());
  for (int k = 0; k < static_cast<int>(net.arcs.size()); ++k) {
    out[net.arcs[k].from].push_back(k);
  }
  for (auto& arcs : out) {
    std::sort(arcs.begin(), arcs.end(), [&](int a, int b) {
      if (net.arcs[a].to != net.arcs[b].to) {
        return net.arcs[a].to < net.arcs[b].to;
      }
      return a < b;
    });
  }
  return out;
}

// Exact Dijkstra distances *to* `target`, skipping nodes flagged in
// `blocked`. nullopt marks unreachable nodes.
std::vector<std::optional<Rational>> DistancesTo(
    const Network& net, int target, const std::vector<bool>& blocked,
    std::span<const Rational> weights) {
  const int n = net.num_nodes();
  std::vector<std::vector<int>> in(n);
  for (int k = 0; k < static_cast<int>(net.arcs.size()); ++k) {
    in[net.arcs[k].to].push_back(k);
  }
  std::vector<std::optional<Rational>> dist(n);
  std::vector<bool> done(n, false);
  if (blocked[target]) return dist;
  dist[target] = Rational(0);
  for (int round = 0; round < n; ++round) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v] || !dist[v]) continue;
      if (best < 0 || *dist[v] < *dist[best]) best = v;
    }
    if (best < 0) break;
    done[best] = true;
    for (int k : in[best]) {
      int u = net.arcs[k].from;
      if (blocked[u] || done[u]) continue;
      Rational candidate = *dist[best] + weights[net.arcs[k].resource];
      if (!dist[u] || candidate < *dist[u]) dist[u] = candidate;
    }
  }
  return dist;
}

}  // namespace

bool IsSimplePath(const Network& net, int source, int target,
                  const ElementSet& resources) {
  if (source == target) return false;
  std::vector<int> next(net.num_nodes(), -1);
  std::vector<int> in_degree(net.num_nodes(), 0);
  int matched = 0;
  for (const Arc& arc : net.arcs) {
    if (!resources.Contains(arc.resource)) continue;
    ++matched;
    if (next[arc.from] != -1) return false;
    next[arc.from] = arc.to;
    ++in_degree[arc.to];
  }
  if (matched != resources.size()) return false;
  if (in_degree[source] != 0) return false;
  int steps = 0;
  int node = source;
  while (node != target) {
    if (next[node] == -1 || ++steps > matched) return false;
    node = next[node];
    if (in_degree[node] != 1) return false;
  }
  return steps == matched && next[target] == -1;
}

bool IsReachable(const Network& net, int source, int target) {
  std::vector<bool> seen(net.num_nodes(), false);
  std::vector<int> stack = {source};
  seen[source] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    if (u == target) return true;
    for (const Arc& arc : net.arcs) {
      if (arc.from == u && !seen[arc.to]) {
        seen[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return false;
}

std::optional<ElementSet> LexMinWeightPath(const Network& net, int source,
                                           int target,
                                           std::span<const Rational> weights) {
  for (const Arc& arc : net.arcs) {
    if (arc.resource >= static_cast<int>(weights.size())) {
      throw InputError("no weight for arc resource");
    }
    if (weights[arc.resource] < 0) {
      throw InputError("negative arc weight");
    }
  }
  const int n = net.num_nodes();
  std::vector<bool> blocked(n, false);
  auto dist = DistancesTo(net, target, blocked, weights);
  if (!dist[source]) return std::nullopt;
  Rational remaining = *dist[source];

  const auto out = SortedOutArcs(net);
  ElementSet path;
  int node = source;
  blocked[source] = true;
  while (node != target) {
    // Fix the smallest next node that still admits an optimal completion
    // avoiding the prefix.
    auto completion = DistancesTo(net, target, blocked, weights);
    int chosen = -1;
    for (int k : out[node]) {
      const Arc& arc = net.arcs[k];
      if (blocked[arc.to] || !completion[arc.to]) continue;
      if (weights[arc.resource] + *completion[arc.to] == remaining) {
        chosen = k;
        break;
      }
    }
    if (chosen < 0) throw InvariantViolation("lex path walk got stuck");
    const Arc& arc = net.arcs[chosen];
    remaining -= weights[arc.resource];
    path.Insert(arc.resource);
    node = arc.to;
    blocked[node] = true;
  }
  return path;
}

std::vector<ElementSet> EnumerateSimplePaths(const Network& net, int source,
                                             int target, std::size_t limit) {
  const auto out = SortedOutArcs(net);
  std::vector<ElementSet> paths;
  std::vector<bool> on_path(net.num_nodes(), false);
  ElementSet current;
  std::function<void(int)> extend = [&](int node) {
    if (node == target) {
      if (paths.size() >= limit) {
        throw CapacityError("more than " + std::to_string(limit) +
                            " simple paths");
      }
      paths.push_back(current);
      return;
    }
    for (int k : out[node]) {
      const Arc& arc = net.arcs[k];
      if (on_path[arc.to]) continue;
      on_path[arc.to] = true;
      current.Insert(arc.resource);
      extend(arc.to);
      current.Erase(arc.resource);
      on_path[arc.to] = false;
    }
  };
  on_path[source] = true;
  extend(source);
  return paths;
}

}  // namespace rbg
