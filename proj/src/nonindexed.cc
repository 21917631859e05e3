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

#include "gwin/nonindexed.hpp"

#include <atomic>
#include <chrono>

#include "gwin/parallel.hpp"

namespace gwin {

ResultTable evaluate_nonindexed(const Graph& g, const AttributeTable& attrs,
                                const WindowSpec& window,
                                const AggregateSpec& aggregate,
                                EvalOptions options) {
  window.check(g);
  if (aggregate.function != AggregateFunction::kCount &&
      attrs.vertex_count() != g.vertex_count()) {
    throw UsageError("attribute table does not match the graph's vertex count");
  }
  const auto start = std::chrono::steady_clock::now();
  ResultTable result;
  result.values.resize(g.vertex_count());
  std::atomic<std::uint64_t> add_ops{0};

  dispatch_aggregate(aggregate, attrs, [&](auto k, auto column) {
    using K = decltype(k);
    parallel_for(g.vertex_count(), options.threads,
                 [&](std::size_t begin, std::size_t end, unsigned) {
                   WindowEnumerator windows(g, window);
                   std::uint64_t ops = 0;
                   for (std::size_t v = begin; v < end; ++v) {
                     auto members = windows.window(static_cast<VertexId>(v));
                     auto s = K::identity();
                     for (VertexId u : members) kernel::add_vertex<K>(s, column, u);
                     ops += members.size() - 1;
                     result.values[v] = K::finalize(s);
                   }
                   add_ops += ops;
                 });
  });

  if (options.stats) {
    options.stats->add_ops = add_ops.load();
    options.stats->phase_one_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    options.stats->phase_two_seconds = 0;
  }
  return result;
}

}  // namespace gwin
