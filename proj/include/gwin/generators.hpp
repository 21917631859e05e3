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

#include "gwin/attributes.hpp"
#include "gwin/graph.hpp"

namespace gwin {

// Erdos-Renyi G(n, m): m = round(n * avg_degree / 2) distinct undirected
// edges, or round(n * avg_degree) distinct arcs when directed. Deterministic
// for a fixed seed. Throws UsageError when avg_degree >= n (unless n == 1 and
// avg_degree == 0) or avg_degree < 0.
Graph generate_random_graph(std::size_t n, double avg_degree, std::uint64_t seed,
                            Directedness directedness = Directedness::kUndirected);

// Random DAG: every vertex gets a random rank and edges only run from lower to
// higher rank; round(n * avg_degree) distinct edges. Throws UsageError when
// that exceeds n * (n - 1) / 2.
Graph generate_random_dag(std::size_t n, double avg_degree, std::uint64_t seed);

// Integer column named `name` with values uniform in [lo, hi].
AttributeColumn generate_integer_attribute(const std::string& name, std::size_t n,
                                           std::int64_t lo, std::int64_t hi,
                                           std::uint64_t seed);

}  // namespace gwin
