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
#include <iosfwd>

#include "gwin/attributes.hpp"
#include "gwin/graph.hpp"

namespace gwin {

struct LoadedGraph {
  Graph graph;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
};

// Reads a SNAP-style edge list: one whitespace-separated "u v" pair per line,
// '#' starts a comment line, blank lines are skipped. Labels are arbitrary
// non-negative integers and get remapped to dense IDs in ascending label
// order. Duplicate edges and self-loops are dropped and counted.
// Throws ParseError on a malformed line and DataError on empty input.
LoadedGraph load_edge_list(std::istream& in, Directedness directedness);

// Writes the canonical edge list using original labels, one edge per line,
// followed by a "v v" line per isolated vertex so the vertex set round-trips.
void write_edge_list(std::ostream& out, const Graph& g);

struct LoadedAttributes {
  AttributeTable table;
  // Rows whose vertex label is not part of the graph.
  std::size_t unknown_rows = 0;
};

// Reads "vertex,<attr1>,<attr2>,..." CSV. Vertices without a row get 0. A
// column whose cells all parse as integers becomes an integer column,
// otherwise a real column.
LoadedAttributes load_attributes(std::istream& in, const Graph& g);

void write_attributes(std::ostream& out, const AttributeTable& table,
                      const Graph& g);

}  // namespace gwin
