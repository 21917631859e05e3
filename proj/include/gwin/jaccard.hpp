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
#include <vector>

#include "gwin/graph.hpp"

namespace gwin {

struct JaccardRow {
  unsigned k = 0;
  std::size_t samples = 0;
  double median = 0;
  double mean = 0;
  double min = 0;
  double max = 0;
};

struct JaccardProfile {
  // One row per k = 1..k_max.
  std::vector<JaccardRow> rows;
};

// Samples `sample_pairs` edges (u, v) uniformly with replacement, or takes
// every edge once when there are no more edges than that, and reports the
// distribution of J_k(u, v) = |W_k(u) & W_k(v)| / |W_k(u) | W_k(v)| for each
// k. Throws UsageError on k_max == 0 or a direction the graph does not accept.
JaccardProfile jaccard_profile(const Graph& g, unsigned k_max, std::size_t sample_pairs,
                               std::uint64_t seed, Direction direction);

}  // namespace gwin
