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
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gwin/aggregate.hpp"
#include "gwin/attributes.hpp"
#include "gwin/generators.hpp"
#include "gwin/graph.hpp"
#include "gwin/random.hpp"
#include "gwin/vertex_set.hpp"
#include "gwin/window.hpp"

namespace gwin::testing {

// Vertex names A, B, C, ... map to dense IDs 0, 1, 2, ...
constexpr VertexId V(char name) { return static_cast<VertexId>(name - 'A'); }

inline VertexSet Set(const std::string& names) {
  std::vector<VertexId> ids;
  for (char c : names) ids.push_back(V(c));
  return VertexSet(std::move(ids));
}

inline std::string Names(std::span<const VertexId> ids) {
  std::vector<VertexId> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (VertexId v : sorted) out.push_back(static_cast<char>('A' + v));
  return out;
}

// Six-person friendship graph (A..F) used by the small hand-checked cases.
inline Graph SocialGraph() {
  const std::vector<Edge> edges = {
      {V('A'), V('B')}, {V('A'), V('C')}, {V('A'), V('D')}, {V('A'), V('E')},
      {V('A'), V('F')}, {V('B'), V('D')}, {V('B'), V('F')}, {V('C'), V('D')},
      {V('C'), V('E')}, {V('C'), V('F')}};
  return Graph::from_edges(6, Directedness::kUndirected, edges);
}

// Eight-vertex DAG (A..H) for the topological-window cases.
inline Graph SampleDag() {
  const std::vector<Edge> edges = {
      {V('A'), V('D')}, {V('B'), V('D')}, {V('D'), V('E')}, {V('C'), V('E')},
      {V('D'), V('H')}, {V('C'), V('F')}, {V('E'), V('G')}, {V('F'), V('G')}};
  return Graph::from_edges(8, Directedness::kDirected, edges);
}

inline Graph Chain(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, Directedness::kDirected, edges);
}

inline AttributeTable RandomAttributes(std::size_t n, std::uint64_t seed,
                                       std::int64_t lo = -50, std::int64_t hi = 1000) {
  AttributeTable t(n);
  t.add_column(generate_integer_attribute("x", n, lo, hi, seed));
  std::vector<double> reals(n);
  Rng rng(seed ^ 0x5eed);
  for (auto& r : reals) r = rng.unit() * 100.0 - 20.0;
  t.add_column(AttributeColumn("r", std::move(reals)));
  return t;
}

inline std::vector<AggregateSpec> AllAggregates(const std::string& attr = "x") {
  return {{AggregateFunction::kSum, attr},
          {AggregateFunction::kCount, ""},
          {AggregateFunction::kAvg, attr},
          {AggregateFunction::kMin, attr},
          {AggregateFunction::kMax, attr}};
}

// ---- independent oracles (no shared code with the library's traversals) ---

// All-pairs hop distances by Floyd-Warshall over the orientation `d`.
inline std::vector<std::vector<std::uint32_t>> HopDistances(const Graph& g, Direction d) {
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max() / 2;
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> dist(n, std::vector<std::uint32_t>(n, kInf));
  for (VertexId v = 0; v < n; ++v) dist[v][v] = 0;
  for (const Edge& e : g.edges()) {
    if (d == Direction::kIn) {
      dist[e.target][e.source] = 1;
    } else {
      dist[e.source][e.target] = 1;
    }
    if (d == Direction::kUndirected) dist[e.target][e.source] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
      }
    }
  }
  return dist;
}

inline VertexSet OracleKHop(const std::vector<std::vector<std::uint32_t>>& dist,
                            VertexId v, unsigned k) {
  std::vector<VertexId> out;
  for (VertexId u = 0; u < dist.size(); ++u) {
    if (dist[v][u] <= k) out.push_back(u);
  }
  return VertexSet(std::move(out));
}

// Ancestor sets (plus the vertex itself) by iterating to a fixed point.
inline std::vector<VertexSet> OracleAncestors(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::uint8_t>> reach(n, std::vector<std::uint8_t>(n, 0));
  for (VertexId v = 0; v < n; ++v) reach[v][v] = 1;
  const auto edges = g.edges();
  for (bool changed = true; changed;) {
    changed = false;
    for (const Edge& e : edges) {
      for (VertexId a = 0; a < n; ++a) {
        if (reach[e.source][a] && !reach[e.target][a]) {
          reach[e.target][a] = 1;
          changed = true;
        }
      }
    }
  }
  std::vector<VertexSet> out;
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> ids;
    for (VertexId a = 0; a < n; ++a) {
      if (reach[v][a]) ids.push_back(a);
    }
    out.emplace_back(std::move(ids));
  }
  return out;
}

// Aggregate over explicitly given windows with plain loops.
inline ResultTable OracleAggregate(const std::vector<VertexSet>& windows,
                                   const AttributeTable& attrs, const AggregateSpec& spec) {
  ResultTable out;
  for (const auto& w : windows) {
    if (spec.function == AggregateFunction::kCount) {
      out.values.push_back(static_cast<std::int64_t>(w.size()));
      continue;
    }
    const auto& col = attrs.column(spec.attribute);
    auto get = [&](VertexId v) {
      return col.kind() == NumericKind::kInteger ? static_cast<double>(col.integers()[v])
                                                 : col.reals()[v];
    };
    if (col.kind() == NumericKind::kInteger && spec.function != AggregateFunction::kAvg) {
      std::int64_t acc = spec.function == AggregateFunction::kSum
                             ? 0
                             : col.integers()[*w.begin()];
      for (VertexId v : w) {
        const std::int64_t x = col.integers()[v];
        if (spec.function == AggregateFunction::kSum) acc += x;
        if (spec.function == AggregateFunction::kMin) acc = std::min(acc, x);
        if (spec.function == AggregateFunction::kMax) acc = std::max(acc, x);
      }
      out.values.push_back(acc);
      continue;
    }
    double acc = spec.function == AggregateFunction::kSum ||
                         spec.function == AggregateFunction::kAvg
                     ? 0.0
                     : get(*w.begin());
    for (VertexId v : w) {
      const double x = get(v);
      if (spec.function == AggregateFunction::kSum ||
          spec.function == AggregateFunction::kAvg) {
        acc += x;
      }
      if (spec.function == AggregateFunction::kMin) acc = std::min(acc, x);
      if (spec.function == AggregateFunction::kMax) acc = std::max(acc, x);
    }
    if (spec.function == AggregateFunction::kAvg) acc /= static_cast<double>(w.size());
    out.values.push_back(acc);
  }
  return out;
}

}  // namespace gwin::testing
