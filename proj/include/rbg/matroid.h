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

#ifndef RBG_MATROID_H_
#define RBG_MATROID_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rbg/element_set.h"
#include "rbg/rational.h"

namespace rbg {

struct PartitionBlock {
  ElementSet elements;
  int capacity = 0;
  friend bool operator==(const PartitionBlock&,
                         const PartitionBlock&) = default;
};

// Undirected edge of a graphic matroid; `element` is the resource it stands
// for. Endpoints index into the matroid's own node list.
struct GraphicEdge {
  int tail = 0;
  int head = 0;
  ResourceIndex element = 0;
  friend bool operator==(const GraphicEdge&, const GraphicEdge&) = default;
};

// A matroid on a finite ground set of resources, given by one of a few
// concrete presentations. All presentations answer rank queries exactly.
class Matroid {
 public:
  enum class Kind { kUniform, kPartition, kGraphic, kFree, kExplicitBases };

  static Matroid Uniform(ElementSet ground, int rank);
  // Ground set is the (disjoint) union of the blocks.
  static Matroid Partition(std::vector<PartitionBlock> blocks);
  static Matroid Graphic(std::vector<std::string> nodes,
                         std::vector<GraphicEdge> edges);
  static Matroid Free(ElementSet ground);
  // Throws InputError naming the exchange violation if `bases` is not the
  // base family of a matroid.
  static Matroid FromBases(std::vector<ElementSet> bases);

  Kind kind() const { return kind_; }
  const ElementSet& ground() const { return ground_; }

  // Rank of x; x must be a subset of the ground set.
  int Rank(const ElementSet& x) const;
  int FullRank() const { return full_rank_; }
  bool IsIndependent(const ElementSet& x) const {
    return Rank(x) == x.size();
  }
  bool IsBasis(const ElementSet& b) const;

  int uniform_rank() const { return uniform_rank_; }
  const std::vector<PartitionBlock>& blocks() const { return blocks_; }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<GraphicEdge>& edges() const { return edges_; }
  const std::vector<ElementSet>& bases() const { return bases_; }

  friend bool operator==(const Matroid& a, const Matroid& b);

 private:
  Matroid() = default;
  int RawRank(const ElementSet& x) const;

  Kind kind_ = Kind::kFree;
  ElementSet ground_;
  int full_rank_ = 0;
  int uniform_rank_ = 0;
  std::vector<PartitionBlock> blocks_;
  std::vector<std::string> nodes_;
  std::vector<GraphicEdge> edges_;
  std::vector<int> edge_of_element_;  // element -> edge index or -1
  std::vector<ElementSet> bases_;
};

// Minor (base / contracted) \ deleted of a matroid. Rank queries use
// r(X | T) = r_base(X + T) - r_base(T); minor bases are never materialized.
// Views are immutable; Contract and Delete return new views.
class MatroidView {
 public:
  MatroidView(Matroid base);  // NOLINT: a matroid is its own trivial minor
  explicit MatroidView(std::shared_ptr<const Matroid> base);

  const Matroid& base() const { return *base_; }
  const ElementSet& contracted() const { return contracted_; }
  const ElementSet& deleted() const { return deleted_; }
  const ElementSet& ground() const { return ground_; }

  // Throws InputError if x leaves the current ground set.
  int Rank(const ElementSet& x) const;
  int FullRank() const { return full_rank_; }
  bool IsIndependent(const ElementSet& x) const {
    return Rank(x) == x.size();
  }
  bool IsBasis(const ElementSet& b) const;
  // C is a cut iff ground \ C contains no basis.
  bool IsCut(const ElementSet& c) const;

  // Requires e in the current ground and not a loop of the minor.
  MatroidView Contract(ResourceIndex e) const;
  // Requires x to be a subset of the current ground.
  MatroidView Delete(const ElementSet& x) const;

 private:
  MatroidView(std::shared_ptr<const Matroid> base, ElementSet contracted,
              ElementSet deleted);

  std::shared_ptr<const Matroid> base_;
  ElementSet contracted_;
  ElementSet deleted_;
  ElementSet ground_;
  int contracted_rank_ = 0;
  int full_rank_ = 0;
};

// A player's current minor, as used by the bottleneck sweep.
struct PlayerView {
  int player = 0;
  MatroidView view;
};

struct CutCertificate {
  ElementSet cut;
  ResourceIndex bottleneck = 0;
  int owner = 0;
  Rational bottleneck_weight;
};

// Among all inclusion-minimal cuts of all given views, finds one whose
// minimum-weight element is as heavy as possible. Weights are indexed by
// resource; equal weights are ordered by resource index, the smaller index
// counting as lighter.
//
// Elements are swept by decreasing (weight, index). The shortest prefix that
// contains a cut of some view fixes the bottleneck as its last element: every
// cut inside that prefix must contain it, since the prefix without it holds
// no cut. The prefix is then shrunk to a minimal cut of the smallest-id view
// owning one, trying removals heaviest first and never removing the
// bottleneck. Views of rank zero have no cuts. Returns nullopt if no view has
// a cut.
std::optional<CutCertificate> MaxBottleneckMinCut(
    std::span<const PlayerView> views, std::span<const Rational> weights);

// { f in ground \ B : B - e + f is a basis }.
ElementSet ExchangeSet(const Matroid& m, const ElementSet& basis,
                       ResourceIndex e);

// e lies in every basis.
bool IsColoop(const Matroid& m, ResourceIndex e);

// Greedy: elements by increasing (weight, index), kept while independent.
ElementSet MinWeightBasis(const Matroid& m, std::span<const Rational> weights);
ElementSet MinWeightBasis(const MatroidView& v,
                          std::span<const Rational> weights);

inline constexpr std::size_t kDefaultBasisCandidateLimit = std::size_t{1}
                                                           << 16;

// All bases in lexicographic order. Throws CapacityError when the number of
// rank-sized candidate subsets exceeds `max_candidates`.
std::vector<ElementSet> EnumerateBases(
    const MatroidView& v,
    std::size_t max_candidates = kDefaultBasisCandidateLimit);
std::vector<ElementSet> EnumerateBases(
    const Matroid& m,
    std::size_t max_candidates = kDefaultBasisCandidateLimit);

// Witness that X - x + y is outside the family for every y in Y \ X.
struct ExchangeViolation {
  ElementSet x_set;
  ElementSet y_set;
  ResourceIndex element = 0;
};

// nullopt iff the family satisfies the basis exchange property. Exchange
// alone forces equal cardinalities, so unequal sizes always surface as a
// violation. Scans X, Y in list order and x in increasing order.
std::optional<ExchangeViolation> ValidateExplicitBases(
    std::span<const ElementSet> sets);

}  // namespace rbg

#endif  // RBG_MATROID_H_
