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

// A window (or the residual of one) held in memory for the vertex that owns it.
struct OwnedWindow {
  VertexId owner;
  // Duplicate-free; any order.
  std::vector<VertexId> members;
};

// Block produced by dense-block identification, together with the owners whose
// windows it belongs to.
struct EmittedBlock {
  std::vector<VertexId> members;  // sorted
  std::vector<VertexId> owners;   // sorted
  bool dense = false;
  unsigned depth = 0;
};

struct RefineOptions {
  std::uint32_t signature_size = 4;
  std::uint64_t seed = 1;
  // Identification passes per cluster; after the last one the remaining
  // blocks are emitted as they are.
  std::uint32_t max_rounds = 8;
};

// Partitions the union of the owners' windows into classes of nodes covered by
// exactly the same set of owners. A class with at least two nodes covered by
// at least two owners is dense. Without any dense class every class is
// emitted; otherwise the dense ones are emitted, their nodes removed from every
// window, and the non-empty residual windows are handed to refine_cluster.
// Every emitted block lists all owners whose (residual) window contains it, so
// each owner's window is the disjoint union of the blocks listing it.
//
// `windows` is consumed; residuals are computed in place so the resident
// window mass never exceeds the input's.
void identify_dense_blocks(std::vector<OwnedWindow>&& windows, unsigned depth,
                           const RefineOptions& options,
                           std::vector<EmittedBlock>& out);

// Re-clusters residual windows by min-hash signature equality (with seeds
// derived from the round) and runs identify_dense_blocks on each sub-cluster.
void refine_cluster(std::vector<OwnedWindow>&& residual, unsigned depth,
                    const RefineOptions& options, std::vector<EmittedBlock>& out);

// Groups item indices by identical signature rows (row i is
// signatures[i*m .. i*m+m)). Groups come out ordered by their first index and
// each group is ascending.
std::vector<std::vector<std::uint32_t>> group_by_signature(
    const std::vector<std::uint64_t>& signatures, std::size_t m, std::size_t count);

}  // namespace gwin
