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

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gwin {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class Directedness : std::uint8_t { kDirected, kUndirected };

// Edge orientation a traversal follows. kUndirected is only valid on
// undirected graphs, kOut/kIn only on directed ones.
enum class Direction : std::uint8_t { kOut, kIn, kUndirected };

struct Edge {
  VertexId source;
  VertexId target;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable adjacency structure in CSR form. Vertex IDs are dense in
// [0, vertex_count()); every vertex also carries the original label it was
// ingested under. Adjacency lists are sorted ascending and free of duplicates
// and self-loops. Undirected edges are stored in both endpoint lists; directed
// graphs additionally keep the reverse (in-neighbor) adjacency.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from dense-ID edges. Throws UsageError on out-of-range
  // endpoints, self-loops, or duplicate edges (for undirected graphs (u,v) and
  // (v,u) are the same edge). `labels` defaults to the identity mapping.
  static Graph from_edges(std::size_t vertex_count, Directedness directedness,
                          std::span<const Edge> edges,
                          std::vector<std::uint64_t> labels = {});

  std::size_t vertex_count() const { return labels_.size(); }
  // Number of distinct edges (an undirected edge counts once).
  std::size_t edge_count() const { return edge_count_; }
  Directedness directedness() const { return directedness_; }
  bool directed() const { return directedness_ == Directedness::kDirected; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v],
            out_targets_.data() + out_offsets_[v + 1]};
  }
  // In-neighbors for directed graphs, the plain adjacency for undirected ones.
  std::span<const VertexId> in_neighbors(VertexId v) const {
    if (!directed()) return out_neighbors(v);
    return {in_targets_.data() + in_offsets_[v],
            in_targets_.data() + in_offsets_[v + 1]};
  }
  std::span<const VertexId> neighbors(VertexId v, Direction d) const {
    return d == Direction::kIn ? in_neighbors(v) : out_neighbors(v);
  }

  bool has_vertex(VertexId v) const { return v < vertex_count(); }
  bool has_edge(VertexId u, VertexId v) const;

  // True when `d` is a legal traversal orientation for this graph.
  bool accepts(Direction d) const {
    return directed() ? d != Direction::kUndirected : d == Direction::kUndirected;
  }
  // kOut for directed graphs, kUndirected otherwise.
  Direction default_direction() const {
    return directed() ? Direction::kOut : Direction::kUndirected;
  }

  std::uint64_t label(VertexId v) const { return labels_[v]; }
  std::span<const std::uint64_t> labels() const { return labels_; }
  std::optional<VertexId> find_label(std::uint64_t label) const;

  // Canonical edge list: sorted; undirected edges reported once with
  // source < target.
  std::vector<Edge> edges() const;

  Graph with_edge(VertexId u, VertexId v) const;
  Graph without_edge(VertexId u, VertexId v) const;

  // Hash of the directedness, labels, and canonical edge list.
  std::uint64_t fingerprint() const;

 private:
  Directedness directedness_ = Directedness::kUndirected;
  std::size_t edge_count_ = 0;
  std::vector<std::uint64_t> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<std::uint64_t> in_offsets_;
  std::vector<VertexId> in_targets_;
  std::vector<std::uint64_t> labels_;
};

}  // namespace gwin
