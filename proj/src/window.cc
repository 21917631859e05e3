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

#include "gwin/window.hpp"

#include "gwin/error.hpp"

namespace gwin {

void WindowSpec::check(const Graph& g) const {
  if (kind == WindowKind::kKHop) {
    if (k == 0) throw UsageError("k-hop window needs k >= 1");
    if (!g.accepts(direction)) {
      throw UsageError(std::string("direction '") + to_string(direction) +
                       "' does not fit a " +
                       (g.directed() ? "directed" : "undirected") + " graph");
    }
    return;
  }
  if (!g.directed()) {
    throw UsageError("topological windows require a directed acyclic graph");
  }
  require_acyclic(g);
}

std::string WindowSpec::describe() const {
  if (kind == WindowKind::kTopological) return "topological";
  return std::to_string(k) + "-hop/" + to_string(direction);
}

const char* to_string(Direction d) {
  switch (d) {
    case Direction::kOut:
      return "out";
    case Direction::kIn:
      return "in";
    case Direction::kUndirected:
      return "undirected";
  }
  return "?";
}

const char* to_string(WindowKind k) {
  return k == WindowKind::kKHop ? "khop" : "topological";
}

}  // namespace gwin
