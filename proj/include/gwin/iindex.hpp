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
#include <vector>

#include "gwin/aggregate.hpp"
#include "gwin/attributes.hpp"
#include "gwin/graph.hpp"
#include "gwin/vertex_set.hpp"

namespace gwin {

// Per-vertex I-Index record: the closest parent and the window difference
// wd = W_t(v) \ W_t(pid) \ {v}, kept sorted.
struct IIndexEntry {
  VertexId pid = kNoVertex;
  std::vector<VertexId> wd;

  friend bool operator==(const IIndexEntry&, const IIndexEntry&) = default;
};

struct IIndexUpdateStats;

// Inheritance Index for topological windows on a DAG. Window cardinalities
// and the parent-first evaluation order are derived from the entries.
class IIndex {
 public:
  IIndex() = default;
  // Throws FormatError if a pid is out of range or the pid links loop.
  IIndex(std::vector<IIndexEntry> entries, std::uint64_t graph_fingerprint);

  std::size_t vertex_count() const { return entries_.size(); }
  const IIndexEntry& entry(VertexId v) const { return entries_[v]; }
  std::span<const IIndexEntry> entries() const { return entries_; }
  std::uint64_t window_cardinality(VertexId v) const { return cardinality_[v]; }
  // Every vertex after its pid.
  std::span<const VertexId> evaluation_order() const { return order_; }
  std::uint64_t wd_entry_count() const;

  std::uint64_t graph_fingerprint() const { return fingerprint_; }
  void set_graph_fingerprint(std::uint64_t f) { fingerprint_ = f; }

  friend bool operator==(const IIndex& a, const IIndex& b) {
    return a.fingerprint_ == b.fingerprint_ && a.entries_ == b.entries_;
  }

 private:
  friend Graph apply_edge_update(IIndex&, const Graph&, Edge, bool,
                                 IIndexUpdateStats*);
  void derive();

  std::vector<IIndexEntry> entries_;
  std::vector<std::uint64_t> cardinality_;
  std::vector<VertexId> order_;
  std::uint64_t fingerprint_ = 0;
};

struct IIndexBuildStats {
  double seconds = 0;
  // Windows held at once during the scan.
  std::size_t peak_live_windows = 0;
};

// One topological scan. pid is the in-neighbor with the largest window
// (smallest ID on ties); windows are released once their last child consumed
// them. Throws UsageError on an undirected graph and CycleError on a cycle.
IIndex build_iindex(const Graph& g, IIndexBuildStats* stats = nullptr);

// {v} + wd(v) + the pid's window, recursively.
VertexSet materialize_window(const IIndex& index, VertexId v);

// result(v) = own value (+) partial(pid) (+) fold(wd), in pid-forest order.
ResultTable evaluate(const IIndex& index, const AttributeTable& attrs,
                     const AggregateSpec& aggregate, EvalOptions options = {});

struct IIndexUpdateStats {
  // t and its descendants.
  std::size_t affected = 0;
  std::size_t recomputed = 0;
  std::size_t skipped = 0;
  std::size_t parent_changes = 0;
  // Deletion of t's own pid edge, which forces t to choose a new parent.
  bool parent_removed = false;
};

// Inserts (insert = true) or deletes edge s -> t and recomputes the entries
// of t and its descendants in topological order, skipping those none of whose
// parents' windows changed. Throws UsageError on a duplicate or missing edge
// and CycleError when an insertion would close a cycle.
Graph apply_edge_update(IIndex& index, const Graph& g, Edge edge, bool insert,
                        IIndexUpdateStats* stats = nullptr);

struct IIndexSizeReport {
  std::uint64_t wd_entries = 0;
  std::uint64_t index_bytes = 0;
  std::uint64_t graph_bytes = 0;
  double ratio = 0;
};

// Serialized index size against the serialized graph size.
IIndexSizeReport index_size_report(const IIndex& index, const Graph& g);

}  // namespace gwin
