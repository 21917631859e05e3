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

#include <cstdint>
#include <span>
#include <vector>

#include "gwin/graph.hpp"
#include "gwin/vertex_set.hpp"

namespace gwin {

// Reusable breadth-first search scratch. Visited marks are epoch-stamped so a
// traversal costs O(window + scanned edges) rather than O(n). One instance per
// thread; the returned span stays valid until the next call.
class Traversal {
 public:
  explicit Traversal(const Graph& g);

  // Vertices within `k` hops of `v` along `d`, focal vertex first, in BFS
  // order (unsorted). k == 0 yields {v}.
  std::span<const VertexId> khop(VertexId v, unsigned k, Direction d);

  // Every vertex reachable from `v` along `d` with no hop bound, `v` first.
  std::span<const VertexId> reachable(VertexId v, Direction d);

  // Like khop() but also records the hop distance of each returned vertex
  // (distances()[i] belongs to the i-th returned vertex).
  std::span<const VertexId> khop_with_distance(VertexId v, unsigned k, Direction d);
  std::span<const std::uint32_t> distances() const { return dist_; }

  const Graph& graph() const { return *g_; }

 private:
  bool mark(VertexId v) {
    if (stamp_[v] == epoch_) return false;
    stamp_[v] = epoch_;
    return true;
  }
  void next_epoch();

  const Graph* g_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> order_;
  std::vector<std::uint32_t> dist_;
};

// Validates (v, k, d) against g and returns the sorted k-hop window including
// v. Throws UsageError on an invalid vertex, k == 0, or a direction that does
// not fit the graph's directedness.
VertexSet khop_window(const Graph& g, VertexId v, unsigned k, Direction d);

// Kahn order with ties broken by smallest vertex ID. Throws UsageError on an
// undirected graph and CycleError naming a vertex on a cycle.
std::vector<VertexId> topological_order(const Graph& g);

// Throws CycleError if the directed graph has a cycle.
void require_acyclic(const Graph& g);

// v together with all of its ancestors. Checks acyclicity first (O(n + m));
// use Traversal::reachable(v, Direction::kIn) inside loops.
VertexSet topological_window(const Graph& g, VertexId v);

// v together with all of its descendants.
VertexSet descendants_of(const Graph& g, VertexId v);

}  // namespace gwin
