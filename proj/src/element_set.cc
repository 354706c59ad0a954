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

#include "rbg/element_set.h"

#include <algorithm>
#include <iterator>
#include <sstream>

namespace rbg {

ElementSet::ElementSet(std::initializer_list<ResourceIndex> elements)
    : ElementSet(std::vector<ResourceIndex>(elements)) {}

ElementSet::ElementSet(std::vector<ResourceIndex> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

bool ElementSet::Contains(ResourceIndex e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool ElementSet::IsSubsetOf(const ElementSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(),
                       elements_.begin(), elements_.end());
}

void ElementSet::Insert(ResourceIndex e) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it == elements_.end() || *it != e) elements_.insert(it, e);
}

void ElementSet::Erase(ResourceIndex e) {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), e);
  if (it != elements_.end() && *it == e) elements_.erase(it);
}

ElementSet ElementSet::With(ResourceIndex e) const {
  ElementSet s = *this;
  s.Insert(e);
  return s;
}

ElementSet ElementSet::Without(ResourceIndex e) const {
  ElementSet s = *this;
  s.Erase(e);
  return s;
}

ElementSet ElementSet::Union(const ElementSet& other) const {
  ElementSet s;
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(),
                 other.elements_.end(), std::back_inserter(s.elements_));
  return s;
}

ElementSet ElementSet::Intersect(const ElementSet& other) const {
  ElementSet s;
  std::set_intersection(elements_.begin(), elements_.end(),
                        other.elements_.begin(), other.elements_.end(),
                        std::back_inserter(s.elements_));
  return s;
}

ElementSet ElementSet::Minus(const ElementSet& other) const {
  ElementSet s;
  std::set_difference(elements_.begin(), elements_.end(),
                      other.elements_.begin(), other.elements_.end(),
                      std::back_inserter(s.elements_));
  return s;
}

std::ostream& operator<<(std::ostream& os, const ElementSet& s) {
  os << "{";
  bool first = true;
  for (ResourceIndex e : s) {
    if (!first) os << ",";
    os << e;
    first = false;
  }
  return os << "}";
}

std::string ToString(const ElementSet& s) {
  std::ostringstream os;
  os << s;
  return os.str();
}

}  // namespace rbg
