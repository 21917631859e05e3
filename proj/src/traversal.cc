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

#include "gwin/traversal.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "gwin/error.hpp"

namespace gwin {

Traversal::Traversal(const Graph& g) : g_(&g), stamp_(g.vertex_count(), 0) {}

void Traversal::next_epoch() {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
}

std::span<const VertexId> Traversal::khop(VertexId v, unsigned k, Direction d) {
  next_epoch();
  order_.clear();
  order_.push_back(v);
  mark(v);
  std::size_t level_begin = 0;
  for (unsigned hop = 0; hop < k; ++hop) {
    const std::size_t level_end = order_.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (VertexId u : g_->neighbors(order_[i], d)) {
        if (mark(u)) order_.push_back(u);
      }
    }
    level_begin = level_end;
  }
  return order_;
}

std::span<const VertexId> Traversal::reachable(VertexId v, Direction d) {
  next_epoch();
  order_.clear();
  order_.push_back(v);
  mark(v);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (VertexId u : g_->neighbors(order_[i], d)) {
      if (mark(u)) order_.push_back(u);
    }
  }
  return order_;
}

std::span<const VertexId> Traversal::khop_with_distance(VertexId v, unsigned k,
                                                        Direction d) {
  next_epoch();
  order_.clear();
  dist_.clear();
  order_.push_back(v);
  dist_.push_back(0);
  mark(v);
  std::size_t level_begin = 0;
  for (unsigned hop = 0; hop < k; ++hop) {
    const std::size_t level_end = order_.size();
    if (level_begin == level_end) break;
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (VertexId u : g_->neighbors(order_[i], d)) {
        if (mark(u)) {
          order_.push_back(u);
          dist_.push_back(hop + 1);
        }
      }
    }
    level_begin = level_end;
  }
  return order_;
}

VertexSet khop_window(const Graph& g, VertexId v, unsigned k, Direction d) {
  if (!g.has_vertex(v)) {
    throw UsageError("vertex " + std::to_string(v) + " out of range");
  }
  if (k == 0) throw UsageError("hop count must be at least 1");
  if (!g.accepts(d)) {
    throw UsageError("traversal direction does not match graph directedness");
  }
  Traversal t(g);
  return VertexSet(t.khop(v, k, d));
}

std::vector<VertexId> topological_order(const Graph& g) {
  if (!g.directed()) {
    throw UsageError("topological order requires a directed graph");
  }
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> indegree(n);
  for (VertexId v = 0; v < n; ++v) {
    indegree[v] = static_cast<std::uint32_t>(g.in_neighbors(v).size());
  }
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId w : g.out_neighbors(v)) {
      if (--indegree[w] == 0) ready.push(w);
    }
  }
  if (order.size() == n) return order;

  // Every leftover vertex has a leftover in-neighbor; walking those
  // backwards must revisit a vertex, and that vertex is on a cycle.
  VertexId start = 0;
  while (indegree[start] == 0) ++start;
  std::vector<std::uint8_t> seen(n, 0);
  VertexId cur = start;
  while (!seen[cur]) {
    seen[cur] = 1;
    for (VertexId p : g.in_neighbors(cur)) {
      if (indegree[p] != 0) {
        cur = p;
        break;
      }
    }
  }
  throw CycleError(cur, "graph has a cycle through vertex " +
                            std::to_string(g.label(cur)));
}

void require_acyclic(const Graph& g) { (void)topological_order(g); }

VertexSet topological_window(const Graph& g, VertexId v) {
  if (!g.has_vertex(v)) {
    throw UsageError("vertex " + std::to_string(v) + " out of range");
  }
  require_acyclic(g);
  Traversal t(g);
  return VertexSet(t.reachable(v, Direction::kIn));
}

VertexSet descendants_of(const Graph& g, VertexId v) {
  if (!g.has_vertex(v)) {
    throw UsageError("vertex " + std::to_string(v) + " out of range");
  }
  Traversal t(g);
  return VertexSet(t.reachable(v, g.default_direction()));
}

}  // namespace gwin
