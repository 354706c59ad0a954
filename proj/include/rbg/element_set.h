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

#ifndef RBG_ELEMENT_SET_H_
#define RBG_ELEMENT_SET_H_

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace rbg {

// Resources are addressed by their declaration index in the instance. The
// declaration order doubles as the global tie-breaking order.
using ResourceIndex = int;

// A finite set of resource indices, stored sorted and duplicate free.
// Ordering is lexicographic on the sorted sequence.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::initializer_list<ResourceIndex> elements);
  explicit ElementSet(std::vector<ResourceIndex> elements);

  bool Contains(ResourceIndex e) const;
  bool IsSubsetOf(const ElementSet& other) const;
  bool empty() const { return elements_.empty(); }
  int size() const { return static_cast<int>(elements_.size()); }

  void Insert(ResourceIndex e);
  void Erase(ResourceIndex e);

  ElementSet With(ResourceIndex e) const;
  ElementSet Without(ResourceIndex e) const;
  ElementSet Union(const ElementSet& other) const;
  ElementSet Intersect(const ElementSet& other) const;
  ElementSet Minus(const ElementSet& other) const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }
  ResourceIndex operator[](int k) const { return elements_[k]; }
  const std::vector<ResourceIndex>& elements() const { return elements_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<ResourceIndex> elements_;
};

std::ostream& operator<<(std::ostream& os, const ElementSet& s);
std::string ToString(const ElementSet& s);  // "{1,2}"

}  // namespace rbg

#endif  // RBG_ELEMENT_SET_H_
