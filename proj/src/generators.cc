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

#include "gwin/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>

#include "gwin/error.hpp"
#include "gwin/random.hpp"

namespace gwin {
namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Draws `m` distinct unordered pairs {u, v}, u != v, reported with u < v.
std::vector<Edge> sample_unordered_pairs(std::size_t n, std::size_t m, Rng& rng) {
  const std::uint64_t max_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<Edge> out;
  out.reserve(m);
  if (m > max_pairs / 2) {
    // Dense request: partial Fisher-Yates over the enumerated pair set.
    std::vector<Edge> all;
    all.reserve(max_pairs);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) all.push_back({u, v});
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::swap(all[i], all[i + rng.below(all.size() - i)]);
      out.push_back(all[i]);
    }
    return out;
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  while (out.size() < m) {
    auto u = static_cast<VertexId>(rng.below(n));
    auto v = static_cast<VertexId>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (seen.insert(pair_key(u, v)).second) out.push_back({u, v});
  }
  return out;
}

std::vector<Edge> sample_arcs(std::size_t n, std::size_t m, Rng& rng) {
  const std::uint64_t max_arcs = static_cast<std::uint64_t>(n) * (n - 1);
  std::vector<Edge> out;
  out.reserve(m);
  if (m > max_arcs / 2) {
    std::vector<Edge> all;
    all.reserve(max_arcs);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        if (u != v) all.push_back({u, v});
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::swap(all[i], all[i + rng.below(all.size() - i)]);
      out.push_back(all[i]);
    }
    return out;
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  while (out.size() < m) {
    auto u = static_cast<VertexId>(rng.below(n));
    auto v = static_cast<VertexId>(rng.below(n));
    if (u == v) continue;
    if (seen.insert(pair_key(u, v)).second) out.push_back({u, v});
  }
  return out;
}

void check_size(std::size_t n, double avg_degree) {
  if (n == 0) throw UsageError("graph must have at least one vertex");
  if (n >= kNoVertex) throw UsageError("vertex count exceeds the 32-bit ID space");
  if (!(avg_degree >= 0.0) || !std::isfinite(avg_degree)) {
    throw UsageError("average degree must be a non-negative number");
  }
}

}  // namespace

Graph generate_random_graph(std::size_t n, double avg_degree, std::uint64_t seed,
                            Directedness directedness) {
  check_size(n, avg_degree);
  if (avg_degree >= static_cast<double>(n) && !(n == 1 && avg_degree == 0.0)) {
    throw UsageError("average degree " + std::to_string(avg_degree) +
                     " must be below the vertex count " + std::to_string(n));
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  if (directedness == Directedness::kUndirected) {
    const auto m = static_cast<std::size_t>(std::llround(n * avg_degree / 2.0));
    if (m > static_cast<std::uint64_t>(n) * (n - 1) / 2) {
      throw UsageError("requested edge count exceeds the simple-graph maximum");
    }
    edges = sample_unordered_pairs(n, m, rng);
  } else {
    const auto m = static_cast<std::size_t>(std::llround(n * avg_degree));
    if (m > static_cast<std::uint64_t>(n) * (n - 1)) {
      throw UsageError("requested arc count exceeds the simple-graph maximum");
    }
    edges = sample_arcs(n, m, rng);
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, directedness, edges);
}

Graph generate_random_dag(std::size_t n, double avg_degree, std::uint64_t seed) {
  check_size(n, avg_degree);
  const auto m = static_cast<std::size_t>(std::llround(n * avg_degree));
  if (m > static_cast<std::uint64_t>(n) * (n - 1) / 2) {
    throw UsageError("requested " + std::to_string(m) +
                     " edges exceed the acyclic maximum for " + std::to_string(n) +
                     " vertices");
  }
  Rng rng(seed);
  std::vector<VertexId> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(rank[i - 1], rank[rng.below(i)]);
  }
  std::vector<Edge> edges = sample_unordered_pairs(n, m, rng);
  for (Edge& e : edges) {
    if (rank[e.source] > rank[e.target]) std::swap(e.source, e.target);
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(n, Directedness::kDirected, edges);
}

AttributeColumn generate_integer_attribute(const std::string& name, std::size_t n,
                                           std::int64_t lo, std::int64_t hi,
                                           std::uint64_t seed) {
  if (hi < lo) throw UsageError("empty attribute value range");
  Rng rng(seed);
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  std::vector<std::int64_t> values(n);
  for (auto& x : values) x = lo + static_cast<std::int64_t>(rng.below(span));
  return AttributeColumn(name, std::move(values));
}

}  // namespace gwin
