/* Copyright 2026 The gwin Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

#include <algorithm>
#include <initializer_list>
#include <span>
#include <vector>

#include "gwin/graph.hpp"

namespace gwin {

// Set of vertex IDs kept as a sorted, duplicate-free vector so iteration order
// is deterministic and equality is a plain comparison.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids)
      : VertexSet(std::vector<VertexId>(ids)) {}
  explicit VertexSet(std::vector<VertexId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }
  explicit VertexSet(std::span<const VertexId> ids)
      : VertexSet(std::vector<VertexId>(ids.begin(), ids.end())) {}

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  bool contains(VertexId v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  // True when every member of this set is in `other`.
  bool subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }

  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }
  std::span<const VertexId> ids() const { return ids_; }
  const std::vector<VertexId>& vector() const { return ids_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> ids_;
};

}  // namespace gwin
