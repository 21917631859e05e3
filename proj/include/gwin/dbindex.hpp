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
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gwin/aggregate.hpp"
#include "gwin/attributes.hpp"
#include "gwin/dense_blocks.hpp"
#include "gwin/graph.hpp"
#include "gwin/window.hpp"

namespace gwin {

using BlockId = std::uint32_t;

enum class BuildStrategy : std::uint8_t { kMC, kEMC };

const char* to_string(BuildStrategy s);

struct BuildParams {
  BuildStrategy strategy = BuildStrategy::kMC;
  // Number of min-hash functions per signature.
  std::uint32_t signature_size = 4;
  std::uint64_t seed = 1;
  // Clusters with more owners are split into equal-size sub-clusters before
  // their windows are materialized.
  std::uint32_t max_cluster = 4096;
  std::uint32_t max_rounds = 8;
  // EMC only: hop count of the windows the initial clustering is computed on.
  std::uint32_t cluster_hops = 1;
  // EMC only: min-hash functions compared when grouping vertices by their
  // short-range signature. Refinement still uses signature_size.
  std::uint32_t cluster_signature_size = 1;
  // Not persisted; results are identical for any thread count.
  unsigned threads = 1;

  RefineOptions refine_options() const {
    return {signature_size, seed, max_rounds};
  }
};

// Structural updates absorbed since the last full (re)build.
struct UpdateLog {
  std::uint64_t updates = 0;
  // 0 disables the staleness signal.
  std::uint64_t staleness_threshold = 0;

  bool stale() const {
    return staleness_threshold != 0 && updates >= staleness_threshold;
  }
};

// Dense Block Index: a bipartite structure of blocks (vertex sets) and links
// (vertex -> blocks) such that every vertex's window is the disjoint union of
// its linked blocks. The index does not depend on the aggregate or attribute.
class DBIndex {
 public:
  DBIndex() = default;
  DBIndex(std::size_t vertex_count, WindowSpec window, BuildParams params,
          std::uint64_t graph_fingerprint);

  std::size_t vertex_count() const { return link_offsets_.size() - 1; }
  std::size_t block_count() const { return block_offsets_.size() - 1; }
  std::span<const VertexId> block(BlockId b) const {
    return {block_members_.data() + block_offsets_[b],
            block_members_.data() + block_offsets_[b + 1]};
  }
  std::span<const BlockId> links(VertexId v) const {
    return {link_ids_.data() + link_offsets_[v], link_ids_.data() + link_offsets_[v + 1]};
  }

  std::uint64_t block_member_count() const { return block_members_.size(); }
  std::uint64_t link_count() const { return link_ids_.size(); }
  // Block members plus links: the number of partial folds plus the number
  // of partial combinations one evaluation performs.
  std::uint64_t total_work() const { return block_member_count() + link_count(); }
  // Blocks with at least two members that are linked from at least two
  // vertices.
  std::size_t dense_block_count() const;

  const WindowSpec& window_spec() const { return window_; }
  const BuildParams& params() const { return params_; }
  BuildParams& mutable_params() { return params_; }
  std::uint64_t graph_fingerprint() const { return fingerprint_; }
  void set_graph_fingerprint(std::uint64_t f) { fingerprint_ = f; }
  const UpdateLog& update_log() const { return log_; }
  UpdateLog& update_log() { return log_; }

  // Inserts a block unless one with the same member set exists; returns its
  // ID. `members` must be sorted, non-empty, and in range.
  BlockId add_block(std::span<const VertexId> members);
  // Appends each (vertex, block) pair to the vertex's links, keeping the
  // pairs' order per vertex. Linear in the total link count, so callers
  // batch. Does not check disjointness (see validate()).
  void add_links(std::span<const std::pair<VertexId, BlockId>> links);
  void add_link(VertexId v, BlockId b);

  // Block lookup by member set.
  std::optional<BlockId> find_block(std::span<const VertexId> members) const;

  friend bool operator==(const DBIndex& a, const DBIndex& b) {
    return a.window_ == b.window_ && a.fingerprint_ == b.fingerprint_ &&
           a.block_offsets_ == b.block_offsets_ &&
           a.block_members_ == b.block_members_ && a.link_offsets_ == b.link_offsets_ &&
           a.link_ids_ == b.link_ids_;
  }

 private:
  static std::uint64_t hash_members(std::span<const VertexId> members);
  std::optional<BlockId> find_block(std::span<const VertexId> members,
                                    std::uint64_t hash) const;

  WindowSpec window_;
  BuildParams params_;
  std::uint64_t fingerprint_ = 0;
  UpdateLog log_;
  std::vector<std::uint64_t> block_offsets_{0};
  std::vector<VertexId> block_members_;
  // Links in CSR form: vertex v owns link_ids_[link_offsets_[v], link_offsets_[v+1]).
  std::vector<std::uint64_t> link_offsets_;
  std::vector<BlockId> link_ids_;
  std::unordered_multimap<std::uint64_t, BlockId> by_hash_;
};

struct BuildStats {
  // Summed worker time: window traversal (both rounds), signature hashing,
  // signature grouping, and dense-block identification plus commit.
  double traversal_seconds = 0;
  double signature_seconds = 0;
  double clustering_seconds = 0;
  double dense_block_seconds = 0;
  double total_seconds = 0;
  std::size_t cluster_count = 0;
  std::size_t largest_cluster = 0;
  // Window entries held in memory at once: peak observed, the largest
  // cluster's window mass, and the largest single traversal.
  std::uint64_t peak_window_entries = 0;
  std::uint64_t max_cluster_mass = 0;
  std::uint64_t max_window_size = 0;
};

// MinHash clustering build: per-vertex window -> signature (window dropped),
// cluster by signature equality, then per cluster re-materialize the windows
// and identify dense blocks. Throws UsageError/CycleError when the window spec
// does not fit the graph.
DBIndex build_mc(const Graph& g, const WindowSpec& window, BuildParams params,
                 BuildStats* stats = nullptr);

// Estimated MinHash clustering: as build_mc but the clustering signatures come
// from cluster_hops-hop windows (cluster_hops < k), so full windows are
// traversed only once. Requires a k-hop spec with k >= 2.
DBIndex build_emc(const Graph& g, const WindowSpec& window, BuildParams params,
                  BuildStats* stats = nullptr);

// Dispatches on params.strategy.
DBIndex build_dbindex(const Graph& g, const WindowSpec& window,
                      const BuildParams& params, BuildStats* stats = nullptr);

// Second half of the build with the clustering supplied by the caller: every
// vertex must appear in exactly one cluster.
DBIndex build_from_clusters(const Graph& g, const WindowSpec& window,
                            const std::vector<std::vector<VertexId>>& clusters,
                            BuildParams params, BuildStats* stats = nullptr);

// Two-phase evaluation: one partial per block, then per vertex the combination
// of its linked blocks' partials.
ResultTable evaluate(const DBIndex& index, const AttributeTable& attrs,
                     const AggregateSpec& aggregate, EvalOptions options = {});

enum class ViolationKind : std::uint8_t {
  kCoverage,
  kDisjointness,
  kDuplicateBlock,
  kMalformedBlock,
  kShape,
};

const char* to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  VertexId vertex = kNoVertex;
  BlockId block = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Recomputes every window and checks coverage, per-vertex disjointness, and
// block uniqueness.
ValidationReport validate(const DBIndex& index, const Graph& g, const WindowSpec& window);

struct InsertionStats {
  // Vertices whose window grew.
  std::size_t grown_windows = 0;
  std::uint64_t added_entries = 0;
  std::size_t new_blocks = 0;
  std::size_t reused_blocks = 0;
  std::size_t new_links = 0;
};

// Inserts edge (u, v) into g and patches the index: the window growth of every
// affected vertex is indexed by a secondary dense-block pass and merged in.
// Returns the updated graph. Throws UsageError for an existing edge or
// self-loop and CycleError when a topological index would stop being acyclic.
Graph apply_edge_insertion(DBIndex& index, const Graph& g, Edge edge,
                           InsertionStats* stats = nullptr);

// Full rebuild with the index's own parameters; resets the update log but
// keeps its staleness threshold.
DBIndex reorganize(const DBIndex& index, const Graph& g, BuildStats* stats = nullptr);

}  // namespace gwin
