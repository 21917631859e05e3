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

#include "gwin/jaccard.hpp"

#include <algorithm>
#include <numeric>

#include "gwin/error.hpp"
#include "gwin/minhash.hpp"
#include "gwin/random.hpp"
#include "gwin/traversal.hpp"

namespace gwin {
namespace {

std::vector<VertexId> sorted_khop(Traversal& t, VertexId v, unsigned k, Direction d) {
  auto w = t.khop(v, k, d);
  std::vector<VertexId> out(w.begin(), w.end());
  std::sort(out.begin(), out.end());
  return out;
}

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace

JaccardProfile jaccard_profile(const Graph& g, unsigned k_max, std::size_t sample_pairs,
                               std::uint64_t seed, Direction direction) {
  if (k_max == 0) throw UsageError("k_max must be at least 1");
  if (!g.accepts(direction)) {
    throw UsageError("direction does not match the graph's directedness");
  }
  const auto edges = g.edges();
  std::vector<Edge> sample;
  if (edges.size() <= sample_pairs) {
    sample = edges;
  } else {
    Rng rng(seed);
    sample.reserve(sample_pairs);
    for (std::size_t i = 0; i < sample_pairs; ++i) {
      sample.push_back(edges[rng.below(edges.size())]);
    }
  }

  JaccardProfile profile;
  Traversal t(g);
  for (unsigned k = 1; k <= k_max; ++k) {
    JaccardRow row{k, sample.size(), 0, 0, 0, 0};
    if (!sample.empty()) {
      std::vector<double> values;
      values.reserve(sample.size());
      for (const Edge& e : sample) {
        const auto a = sorted_khop(t, e.source, k, direction);
        const auto b = sorted_khop(t, e.target, k, direction);
        values.push_back(jaccard(a, b));
      }
      row.mean = std::accumulate(values.begin(), values.end(), 0.0) /
                 static_cast<double>(values.size());
      row.min = *std::min_element(values.begin(), values.end());
      row.max = *std::max_element(values.begin(), values.end());
      row.median = median_of(std::move(values));
    }
    profile.rows.push_back(row);
  }
  return profile;
}

}  // namespace gwin
