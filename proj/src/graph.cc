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

#include "gwin/graph.hpp"

#include <algorithm>
#include <string>

#include "gwin/error.hpp"
#include "gwin/hash.hpp"

namespace gwin {
namespace {

void build_csr(std::size_t n, std::vector<std::pair<VertexId, VertexId>>& arcs,
               std::vector<std::uint64_t>& offsets,
               std::vector<VertexId>& targets) {
  std::sort(arcs.begin(), arcs.end());
  offsets.assign(n + 1, 0);
  for (const auto& [u, v] : arcs) ++offsets[u + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.resize(arcs.size());
  for (std::size_t i = 0; i < arcs.size(); ++i) targets[i] = arcs[i].second;
}

}  // namespace

Graph Graph::from_edges(std::size_t vertex_count, Directedness directedness,
                        std::span<const Edge> edges,
                        std::vector<std::uint64_t> labels) {
  if (vertex_count >= kNoVertex) {
    throw UsageError("vertex count exceeds the 32-bit ID space");
  }
  if (labels.empty()) {
    labels.resize(vertex_count);
    for (std::size_t i = 0; i < vertex_count; ++i) labels[i] = i;
  }
  if (labels.size() != vertex_count) {
    throw UsageError("label table size does not match vertex count");
  }
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (labels[i - 1] >= labels[i]) {
      throw UsageError("vertex labels must be strictly increasing");
    }
  }

  Graph g;
  g.directedness_ = directedness;
  g.labels_ = std::move(labels);

  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(directedness == Directedness::kUndirected ? 2 * edges.size()
                                                         : edges.size());
  for (const Edge& e : edges) {
    if (e.source >= vertex_count || e.target >= vertex_count) {
      throw UsageError("edge endpoint out of range: " +
                       std::to_string(e.source) + " " +
                       std::to_string(e.target));
    }
    if (e.source == e.target) {
      throw UsageError("self-loop at vertex " + std::to_string(e.source));
    }
    arcs.emplace_back(e.source, e.target);
    if (directedness == Directedness::kUndirected) {
      arcs.emplace_back(e.target, e.source);
    }
  }
  build_csr(vertex_count, arcs, g.out_offsets_, g.out_targets_);
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
    throw UsageError("duplicate edge in edge set");
  }
  g.edge_count_ = edges.size();

  if (directedness == Directedness::kDirected) {
    for (auto& arc : arcs) std::swap(arc.first, arc.second);
    build_csr(vertex_count, arcs, g.in_offsets_, g.in_targets_);
  }
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  auto adj = out_neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<VertexId> Graph::find_label(std::uint64_t label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : out_neighbors(u)) {
      if (directed() || u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) throw UsageError("edge endpoint out of range");
  if (has_edge(u, v)) {
    throw UsageError("edge " + std::to_string(label(u)) + " " +
                     std::to_string(label(v)) + " already present");
  }
  std::vector<Edge> e = edges();
  e.push_back({u, v});
  return from_edges(vertex_count(), directedness_, e, labels_);
}

Graph Graph::without_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) throw UsageError("edge endpoint out of range");
  if (!has_edge(u, v)) {
    throw UsageError("edge " + std::to_string(label(u)) + " " +
                     std::to_string(label(v)) + " not present");
  }
  std::vector<Edge> e = edges();
  Edge key = directed() ? Edge{u, v} : Edge{std::min(u, v), std::max(u, v)};
  e.erase(std::find(e.begin(), e.end(), key));
  return from_edges(vertex_count(), directedness_, e, labels_);
}

std::uint64_t Graph::fingerprint() const {
  std::uint64_t h = mix64(directed() ? 0x6477696e44ULL : 0x6477696e55ULL);
  h = hash_combine(h, vertex_count());
  for (std::uint64_t l : labels_) h = hash_combine(h, l);
  for (const Edge& e : edges()) {
    h = hash_combine(h, e.source);
    h = hash_combine(h, e.target);
  }
  return h;
}

}  // namespace gwin
