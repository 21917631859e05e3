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

#include <algorithm>
#include <iterator>
#include <string>

#include "gwin/dbindex.hpp"
#include "gwin/traversal.hpp"

namespace gwin {
namespace {

std::vector<VertexId> sorted_window(WindowEnumerator& windows, VertexId v) {
  auto members = windows.window(v);
  std::vector<VertexId> out(members.begin(), members.end());
  std::sort(out.begin(), out.end());
  return out;
}

// Vertices whose window may grow when edge (u, v) is added: everything from
// which the new edge is reachable within k - 1 hops (k-hop), or the new head
// and its descendants (topological).
std::vector<VertexId> growth_candidates(const Graph& updated, const WindowSpec& w,
                                        VertexId u, VertexId v) {
  Traversal t(updated);
  std::vector<VertexId> out;
  auto take = [&](std::span<const VertexId> s) { out.insert(out.end(), s.begin(), s.end()); };
  if (w.kind == WindowKind::kTopological) {
    take(t.reachable(v, Direction::kOut));
  } else if (w.direction == Direction::kUndirected) {
    take(t.khop(u, w.k - 1, Direction::kUndirected));
    take(t.khop(v, w.k - 1, Direction::kUndirected));
  } else if (w.direction == Direction::kOut) {
    take(t.khop(u, w.k - 1, Direction::kIn));
  } else {
    take(t.khop(v, w.k - 1, Direction::kOut));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Graph apply_edge_insertion(DBIndex& index, const Graph& g, Edge edge,
                           InsertionStats* stats_out) {
  const WindowSpec& window = index.window_spec();
  if (index.vertex_count() != g.vertex_count()) {
    throw UsageError("index does not match the graph's vertex count");
  }
  const VertexId u = edge.source;
  const VertexId v = edge.target;
  if (!g.has_vertex(u) || !g.has_vertex(v)) {
    throw UsageError("edge endpoint out of range");
  }
  if (u == v) throw UsageError("self-loops are not allowed");
  if (g.has_edge(u, v)) {
    throw UsageError("edge " + std::to_string(g.label(u)) + " " +
                     std::to_string(g.label(v)) + " already exists");
  }
  if (window.kind == WindowKind::kTopological) {
    Traversal t(g);
    for (VertexId x : t.reachable(v, Direction::kOut)) {
      if (x == u) {
        throw CycleError(u, "edge " + std::to_string(g.label(u)) + " " +
                                         std::to_string(g.label(v)) +
                                         " would create a cycle");
      }
    }
  }
  Graph updated = g.with_edge(u, v);

  // Window growth W'(x) = W_new(x) \ W_old(x) over the candidate set.
  InsertionStats stats;
  std::vector<OwnedWindow> grown;
  WindowEnumerator before(g, window);
  WindowEnumerator after(updated, window);
  for (VertexId x : growth_candidates(updated, window, u, v)) {
    const auto old_w = sorted_window(before, x);
    const auto new_w = sorted_window(after, x);
    std::vector<VertexId> delta;
    std::set_difference(new_w.begin(), new_w.end(), old_w.begin(), old_w.end(),
                        std::back_inserter(delta));
    if (delta.empty()) continue;
    ++stats.grown_windows;
    stats.added_entries += delta.size();
    grown.push_back({x, std::move(delta)});
  }

  // Secondary index over the growth, merged with block dedup.
  const RefineOptions refine = index.params().refine_options();
  const std::size_t cap = std::max<std::uint32_t>(1, index.params().max_cluster);
  std::vector<EmittedBlock> emitted;
  for (std::size_t begin = 0; begin < grown.size(); begin += cap) {
    const std::size_t end = std::min(grown.size(), begin + cap);
    std::vector<OwnedWindow> chunk(std::make_move_iterator(grown.begin() + begin),
                                   std::make_move_iterator(grown.begin() + end));
    identify_dense_blocks(std::move(chunk), 0, refine, emitted);
  }
  std::vector<std::pair<VertexId, BlockId>> links;
  for (const auto& b : emitted) {
    const std::size_t before_count = index.block_count();
    const BlockId id = index.add_block(b.members);
    if (index.block_count() > before_count) {
      ++stats.new_blocks;
    } else {
      ++stats.reused_blocks;
    }
    for (VertexId owner : b.owners) links.emplace_back(owner, id);
  }
  stats.new_links = links.size();
  index.add_links(links);

  ++index.update_log().updates;
  index.set_graph_fingerprint(updated.fingerprint());
  if (stats_out) *stats_out = stats;
  return updated;
}

DBIndex reorganize(const DBIndex& index, const Graph& g, BuildStats* stats) {
  DBIndex fresh = build_dbindex(g, index.window_spec(), index.params(), stats);
  fresh.update_log().staleness_threshold = index.update_log().staleness_threshold;
  return fresh;
}

}  // namespace gwin
