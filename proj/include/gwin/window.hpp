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
#include <span>
#include <string>

#include "gwin/graph.hpp"
#include "gwin/traversal.hpp"

namespace gwin {

enum class WindowKind : std::uint8_t { kKHop, kTopological };

// Declarative window function. k and direction are meaningful for k-hop
// windows only; topological windows are "v plus its ancestors".
struct WindowSpec {
  WindowKind kind = WindowKind::kKHop;
  unsigned k = 1;
  Direction direction = Direction::kUndirected;

  static WindowSpec khop(unsigned k, Direction direction) {
    return {WindowKind::kKHop, k, direction};
  }
  static WindowSpec topological() {
    return {WindowKind::kTopological, 0, Direction::kIn};
  }

  // Throws UsageError if the spec cannot be evaluated on g (k == 0, wrong
  // direction, topological on an undirected graph) and CycleError if a
  // topological spec meets a cyclic graph.
  void check(const Graph& g) const;

  std::string describe() const;

  friend bool operator==(const WindowSpec&, const WindowSpec&) = default;
};

// Per-thread window materializer for one (graph, spec) pair. Does not
// re-validate; call WindowSpec::check first.
class WindowEnumerator {
 public:
  WindowEnumerator(const Graph& g, const WindowSpec& spec)
      : spec_(spec), traversal_(g) {}

  // Window of v in traversal order, v first. Valid until the next call.
  std::span<const VertexId> window(VertexId v) {
    return spec_.kind == WindowKind::kKHop
               ? traversal_.khop(v, spec_.k, spec_.direction)
               : traversal_.reachable(v, Direction::kIn);
  }

 private:
  WindowSpec spec_;
  Traversal traversal_;
};

const char* to_string(Direction d);
const char* to_string(WindowKind k);

}  // namespace gwin
