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

#include "rbg/matroid.h"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "rbg/errors.h"

namespace rbg {
namespace {

std::string Describe(const ElementSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool Unite(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Binomial coefficient saturating at `cap + 1`.
std::size_t BoundedBinomial(int n, int k, std::size_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::size_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at each step.
    unsigned __int128 next =
        static_cast<unsigned __int128>(result) * (n - k + i) / i;
    if (next > cap) return cap + 1;
    result = static_cast<std::size_t>(next);
  }
  return result;
}

template <typename M>
std::vector<ElementSet> EnumerateBasesImpl(const M& m,
                                           std::size_t max_candidates) {
  const std::vector<ResourceIndex>& ground = m.ground().elements();
  const int n = static_cast<int>(ground.size());
  const int r = m.FullRank();
  if (BoundedBinomial(n, r, max_candidates) > max_candidates) {
    throw CapacityError("basis enumeration over " + std::to_string(n) +
                        " elements of rank " + std::to_string(r) +
                        " exceeds the candidate limit");
  }
  std::vector<ElementSet> bases;
  std::vector<int> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<ResourceIndex> candidate;
    candidate.reserve(r);
    for (int k : pick) candidate.push_back(ground[k]);
    ElementSet set(std::move(candidate));
    if (m.IsIndependent(set)) bases.push_back(std::move(set));
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return bases;
}

template <typename M>
ElementSet MinWeightBasisImpl(const M& m, std::span<const Rational> weights) {
  std::vector<ResourceIndex> order = m.ground().elements();
  for (ResourceIndex e : order) {
    if (e >= static_cast<int>(weights.size())) {
      throw InputError("no weight for element " + std::to_string(e));
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](ResourceIndex a, ResourceIndex b) {
                     return weights[a] < weights[b];
                   });
  ElementSet basis;
  for (ResourceIndex e : order) {
    ElementSet candidate = basis.With(e);
    if (m.IsIndependent(candidate)) basis = std::move(candidate);
    if (basis.size() == m.FullRank()) break;
  }
  return basis;
}

}  // namespace

Matroid Matroid::Uniform(ElementSet ground, int rank) {
  if (rank < 0 || rank > ground.size()) {
    throw InputError("uniform matroid rank " + std::to_string(rank) +
                     " outside [0, " + std::to_string(ground.size()) + "]");
  }
  Matroid m;
  m.kind_ = Kind::kUniform;
  m.ground_ = std::move(ground);
  m.uniform_rank_ = rank;
  m.full_rank_ = rank;
  return m;
}

Matroid Matroid::Partition(std::vector<PartitionBlock> blocks) {
  Matroid m;
  m.kind_ = Kind::kPartition;
  for (const PartitionBlock& block : blocks) {
    if (!m.ground_.Intersect(block.elements).empty()) {
      throw InputError("partition matroid blocks overlap");
    }
    if (block.capacity < 0 || block.capacity > block.elements.size()) {
      throw InputError("partition block capacity out of range");
    }
    m.ground_ = m.ground_.Union(block.elements);
    m.full_rank_ += block.capacity;
  }
  m.blocks_ = std::move(blocks);
  return m;
}

Matroid Matroid::Graphic(std::vector<std::string> nodes,
                         std::vector<GraphicEdge> edges) {
  Matroid m;
  m.kind_ = Kind::kGraphic;
  const int num_nodes = static_cast<int>(nodes.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const GraphicEdge& edge = edges[k];
    if (edge.tail < 0 || edge.tail >= num_nodes || edge.head < 0 ||
        edge.head >= num_nodes) {
      throw InputError("graphic matroid edge endpoint out of range");
    }
    if (edge.element < 0) throw InputError("negative element index");
    if (m.ground_.Contains(edge.element)) {
      throw InputError("graphic matroid maps two edges to element " +
                       std::to_string(edge.element));
    }
    m.ground_.Insert(edge.element);
    if (edge.element >= static_cast<int>(m.edge_of_element_.size())) {
      m.edge_of_element_.resize(edge.element + 1, -1);
    }
    m.edge_of_element_[edge.element] = static_cast<int>(k);
  }
  m.nodes_ = std::move(nodes);
  m.edges_ = std::move(edges);
  m.full_rank_ = m.RawRank(m.ground_);
  return m;
}

Matroid Matroid::Free(ElementSet ground) {
  Matroid m;
  m.kind_ = Kind::kFree;
  m.full_rank_ = ground.size();
  m.ground_ = std::move(ground);
  return m;
}

Matroid Matroid::FromBases(std::vector<ElementSet> bases) {
  if (bases.empty()) throw InputError("explicit matroid without bases");
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (auto violation = ValidateExplicitBases(bases)) {
    throw InputError("not a matroid base family: X=" +
                     Describe(violation->x_set) +
                     " Y=" + Describe(violation->y_set) +
                     " x=" + std::to_string(violation->element));
  }
  Matroid m;
  m.kind_ = Kind::kExplicitBases;
  for (const ElementSet& b : bases) m.ground_ = m.ground_.Union(b);
  m.full_rank_ = bases.front().size();
  m.bases_ = std::move(bases);
  return m;
}

int Matroid::RawRank(const ElementSet& x) const {
  switch (kind_) {
    case Kind::kUniform:
      return std::min(x.size(), uniform_rank_);
    case Kind::kPartition: {
      int rank = 0;
      for (const PartitionBlock& block : blocks_) {
        rank += std::min(x.Intersect(block.elements).size(), block.capacity);
      }
      return rank;
    }
    case Kind::kGraphic: {
      UnionFind forest(static_cast<int>(nodes_.size()));
      int rank = 0;
      for (ResourceIndex e : x) {
        const GraphicEdge& edge = edges_[edge_of_element_[e]];
        if (forest.Unite(edge.tail, edge.head)) ++rank;
      }
      return rank;
    }
    case Kind::kFree:
      return x.size();
    case Kind::kExplicitBases: {
      int rank = 0;
      for (const ElementSet& b : bases_) {
        rank = std::max(rank, x.Intersect(b).size());
      }
      return rank;
    }
  }
  return 0;
}

int Matroid::Rank(const ElementSet& x) const {
  if (!x.IsSubsetOf(ground_)) {
    throw InputError("rank query " + Describe(x) + " leaves ground set " +
                     Describe(ground_));
  }
  return RawRank(x);
}

bool Matroid::IsBasis(const ElementSet& b) const {
  return b.IsSubsetOf(ground_) && b.size() == full_rank_ && IsIndependent(b);
}

bool operator==(const Matroid& a, const Matroid& b) {
  return a.kind_ == b.kind_ && a.ground_ == b.ground_ &&
         a.uniform_rank_ == b.uniform_rank_ && a.blocks_ == b.blocks_ &&
         a.nodes_ == b.nodes_ && a.edges_ == b.edges_ && a.bases_ == b.bases_;
}

MatroidView::MatroidView(Matroid base)
    : MatroidView(std::make_shared<const Matroid>(std::move(base))) {}

MatroidView::MatroidView(std::shared_ptr<const Matroid> base)
    : MatroidView(std::move(base), ElementSet(), ElementSet()) {}

MatroidView::MatroidView(std::shared_ptr<const Matroid> base,
                         ElementSet contracted, ElementSet deleted)
    : base_(std::move(base)),
      contracted_(std::move(contracted)),
      deleted_(std::move(deleted)) {
  ground_ = base_->ground().Minus(contracted_).Minus(deleted_);
  contracted_rank_ = base_->Rank(contracted_);
  full_rank_ = base_->Rank(ground_.Union(contracted_)) - contracted_rank_;
}

int MatroidView::Rank(const ElementSet& x) const {
  if (!x.IsSubsetOf(ground_)) {
    throw InputError("rank query " + Describe(x) +
                     " leaves the minor's ground set " + Describe(ground_));
  }
  return base_->Rank(x.Union(contracted_)) - contracted_rank_;
}

bool MatroidView::IsBasis(const ElementSet& b) const {
  return b.IsSubsetOf(ground_) && b.size() == full_rank_ && IsIndependent(b);
}

bool MatroidView::IsCut(const ElementSet& c) const {
  if (!c.IsSubsetOf(ground_)) {
    throw InputError("cut candidate " + Describe(c) +
                     " leaves the minor's ground set");
  }
  return Rank(ground_.Minus(c)) < full_rank_;
}

MatroidView MatroidView::Contract(ResourceIndex e) const {
  if (!ground_.Contains(e)) {
    throw InputError("cannot contract element " + std::to_string(e) +
                     " outside the current ground set");
  }
  if (Rank(ElementSet{e}) == 0) {
    throw InputError("cannot contract loop " + std::to_string(e));
  }
  return MatroidView(base_, contracted_.With(e), deleted_);
}

MatroidView MatroidView::Delete(const ElementSet& x) const {
  if (!x.IsSubsetOf(ground_)) {
    throw InputError("cannot delete " + Describe(x) +
                     ": not inside the current ground set");
  }
  return MatroidView(base_, contracted_, deleted_.Union(x));
}

std::optional<CutCertificate> MaxBottleneckMinCut(
    std::span<const PlayerView> views, std::span<const Rational> weights) {
  std::vector<const PlayerView*> live;
  ElementSet universe;
  for (const PlayerView& pv : views) {
    if (pv.view.FullRank() == 0) continue;
    live.push_back(&pv);
    universe = universe.Union(pv.view.ground());
  }
  if (live.empty()) return std::nullopt;
  std::stable_sort(live.begin(), live.end(),
                   [](const PlayerView* a, const PlayerView* b) {
                     return a->player < b->player;
                   });
  for (ResourceIndex e : universe) {
    if (e >= static_cast<int>(weights.size())) {
      throw InputError("no weight for element " + std::to_string(e));
    }
  }

  // Heaviest first; among equal weights the larger index comes first.
  std::vector<ResourceIndex> order = universe.elements();
  std::sort(order.begin(), order.end(), [&](ResourceIndex a, ResourceIndex b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a > b;
  });

  ElementSet prefix;
  for (ResourceIndex bottleneck : order) {
    prefix.Insert(bottleneck);
    for (const PlayerView* pv : live) {
      ElementSet cut = prefix.Intersect(pv->view.ground());
      if (!pv->view.IsCut(cut)) continue;
      for (ResourceIndex candidate : order) {
        if (candidate == bottleneck) break;
        if (!cut.Contains(candidate)) continue;
        ElementSet smaller = cut.Without(candidate);
        if (pv->view.IsCut(smaller)) cut = std::move(smaller);
      }
      return CutCertificate{std::move(cut), bottleneck, pv->player,
                            weights[bottleneck]};
    }
  }
  // Unreachable: the full universe is a cut of every live view.
  throw InvariantViolation("bottleneck sweep found no cut");
}

ElementSet ExchangeSet(const Matroid& m, const ElementSet& basis,
                       ResourceIndex e) {
  if (!m.IsBasis(basis)) {
    throw InputError("exchange set requested for non-basis " +
                     Describe(basis));
  }
  if (!basis.Contains(e)) {
    throw InputError("element " + std::to_string(e) + " not in basis");
  }
  ElementSet result;
  ElementSet rest = basis.Without(e);
  for (ResourceIndex f : m.ground().Minus(basis)) {
    if (m.IsIndependent(rest.With(f))) result.Insert(f);
  }
  return result;
}

bool IsColoop(const Matroid& m, ResourceIndex e) {
  if (!m.ground().Contains(e)) {
    throw InputError("element " + std::to_string(e) + " not in ground set");
  }
  return m.Rank(m.ground().Without(e)) < m.FullRank();
}

ElementSet MinWeightBasis(const Matroid& m,
                          std::span<const Rational> weights) {
  return MinWeightBasisImpl(m, weights);
}

ElementSet MinWeightBasis(const MatroidView& v,
                          std::span<const Rational> weights) {
  return MinWeightBasisImpl(v, weights);
}

std::vector<ElementSet> EnumerateBases(const MatroidView& v,
                                       std::size_t max_candidates) {
  return EnumerateBasesImpl(v, max_candidates);
}

std::vector<ElementSet> EnumerateBases(const Matroid& m,
                                       std::size_t max_candidates) {
  return EnumerateBasesImpl(m, max_candidates);
}

std::optional<ExchangeViolation> ValidateExplicitBases(
    std::span<const ElementSet> sets) {
  std::vector<ElementSet> sorted(sets.begin(), sets.end());
  std::sort(sorted.begin(), sorted.end());
  auto member = [&](const ElementSet& s) {
    return std::binary_search(sorted.begin(), sorted.end(), s);
  };
  for (const ElementSet& x_set : sets) {
    for (const ElementSet& y_set : sets) {
      ElementSet y_only = y_set.Minus(x_set);
      for (ResourceIndex x : x_set.Minus(y_set)) {
        ElementSet rest = x_set.Without(x);
        bool exchanged = false;
        for (ResourceIndex y : y_only) {
          if (member(rest.With(y))) {
            exchanged = true;
            break;
          }
        }
        if (!exchanged) return ExchangeViolation{x_set, y_set, x};
      }
    }
  }
  return std::nullopt;
}

}  // namespace rbg
