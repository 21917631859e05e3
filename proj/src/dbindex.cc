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

#include "gwin/dbindex.hpp"

#include <algorithm>
#include <bit>
#include <atomic>
#include <chrono>
#include <string>

#include "gwin/hash.hpp"
#include "gwin/minhash.hpp"
#include "gwin/parallel.hpp"

namespace gwin {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

// Counts window entries that are materialized at the same time across all
// workers and remembers the peak.
class WindowMeter {
 public:
  void add(std::uint64_t n) {
    const std::uint64_t now = current_.fetch_add(n) + n;
    std::uint64_t seen = peak_.load();
    while (now > seen && !peak_.compare_exchange_weak(seen, now)) {
    }
  }
  void sub(std::uint64_t n) { current_.fetch_sub(n); }
  std::uint64_t peak() const { return peak_.load(); }

 private:
  std::atomic<std::uint64_t> current_{0};
  std::atomic<std::uint64_t> peak_{0};
};

struct WorkerTimes {
  double traversal = 0;
  double signature = 0;
  double dense = 0;
  std::uint64_t max_window = 0;
  std::uint64_t max_mass = 0;
};

// Phase one: per-vertex signature over the clustering window, windows dropped
// right after hashing. Returns the clusters, split to at most max_cluster.
std::vector<std::vector<VertexId>> cluster_by_signature(
    const Graph& g, const WindowSpec& signature_window, const BuildParams& params,
    WindowMeter& meter, std::vector<WorkerTimes>& times, BuildStats& stats) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = std::max<std::uint32_t>(
      1, params.strategy == BuildStrategy::kEMC ? params.cluster_signature_size
                                                : params.signature_size);
  const auto seeds = derive_seeds(params.seed, m);
  std::vector<std::uint64_t> signatures(n * m);

  parallel_for(n, params.threads, [&](std::size_t begin, std::size_t end, unsigned w) {
    WindowEnumerator windows(g, signature_window);
    WorkerTimes& t = times[w];
    for (std::size_t v = begin; v < end; ++v) {
      const auto t0 = Clock::now();
      auto members = windows.window(static_cast<VertexId>(v));
      meter.add(members.size());
      const auto t1 = Clock::now();
      minhash_into(members, seeds,
                   std::span<std::uint64_t>(signatures.data() + v * m, m));
      meter.sub(members.size());
      t.max_window = std::max<std::uint64_t>(t.max_window, members.size());
      t.traversal += std::chrono::duration<double>(t1 - t0).count();
      t.signature += seconds_since(t1);
    }
  });

  const auto t0 = Clock::now();
  auto groups = group_by_signature(signatures, m, n);
  signatures.clear();
  signatures.shrink_to_fit();
  std::vector<std::vector<VertexId>> clusters;
  clusters.reserve(groups.size());
  const std::size_t cap = std::max<std::uint32_t>(1, params.max_cluster);
  for (auto& group : groups) {
    if (group.size() <= cap) {
      clusters.emplace_back(group.begin(), group.end());
      continue;
    }
    const std::size_t parts = (group.size() + cap - 1) / cap;
    for (std::size_t i = 0; i < parts; ++i) {
      clusters.emplace_back(group.begin() + group.size() * i / parts,
                            group.begin() + group.size() * (i + 1) / parts);
    }
  }
  stats.clustering_seconds += seconds_since(t0);
  return clusters;
}

// Phase two: per cluster, re-materialize the owners' windows and identify
// dense blocks. Clusters are processed in batches of `threads` and committed
// in cluster order, so the index does not depend on the thread count.
DBIndex index_clusters(const Graph& g, const WindowSpec& window,
                       const std::vector<std::vector<VertexId>>& clusters,
                       const BuildParams& params, WindowMeter& meter,
                       std::vector<WorkerTimes>& times) {
  DBIndex index(g.vertex_count(), window, params, g.fingerprint());
  const RefineOptions refine = params.refine_options();
  const unsigned threads = std::max(1u, params.threads);
  std::vector<WindowEnumerator> enumerators;
  enumerators.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) enumerators.emplace_back(g, window);

  std::vector<std::vector<EmittedBlock>> emitted(threads);
  std::vector<std::pair<VertexId, BlockId>> links;
  for (std::size_t base = 0; base < clusters.size(); base += threads) {
    const std::size_t batch = std::min<std::size_t>(threads, clusters.size() - base);
    parallel_for(batch, threads, [&](std::size_t begin, std::size_t end, unsigned w) {
      for (std::size_t i = begin; i < end; ++i) {
        const auto& cluster = clusters[base + i];
        WorkerTimes& t = times[w];
        auto& out = emitted[i];
        out.clear();
        const auto t0 = Clock::now();
        std::vector<OwnedWindow> owned;
        owned.reserve(cluster.size());
        std::uint64_t mass = 0;
        for (VertexId owner : cluster) {
          auto members = enumerators[w].window(owner);
          meter.add(members.size());
          mass += members.size();
          owned.push_back({owner, {members.begin(), members.end()}});
        }
        const auto t1 = Clock::now();
        identify_dense_blocks(std::move(owned), 0, refine, out);
        meter.sub(mass);
        t.max_mass = std::max(t.max_mass, mass);
        t.traversal += std::chrono::duration<double>(t1 - t0).count();
        t.dense += seconds_since(t1);
      }
    });
    const auto t0 = Clock::now();
    for (std::size_t i = 0; i < batch; ++i) {
      for (const auto& b : emitted[i]) {
        const BlockId id = index.add_block(b.members);
        for (VertexId owner : b.owners) links.emplace_back(owner, id);
      }
      emitted[i].clear();
    }
    times[0].dense += seconds_since(t0);
  }
  const auto t0 = Clock::now();
  index.add_links(links);
  times[0].dense += seconds_since(t0);
  return index;
}

void fold_times(const std::vector<WorkerTimes>& times, BuildStats& stats) {
  for (const auto& t : times) {
    stats.traversal_seconds += t.traversal;
    stats.signature_seconds += t.signature;
    stats.dense_block_seconds += t.dense;
    stats.max_window_size = std::max(stats.max_window_size, t.max_window);
    stats.max_cluster_mass = std::max(stats.max_cluster_mass, t.max_mass);
  }
}

DBIndex build_clustered(const Graph& g, const WindowSpec& window,
                        const WindowSpec& signature_window, BuildParams params,
                        BuildStats* stats_out) {
  const auto start = Clock::now();
  params.threads = std::max(1u, params.threads);
  BuildStats stats;
  WindowMeter meter;
  std::vector<WorkerTimes> times(params.threads);
  auto clusters =
      cluster_by_signature(g, signature_window, params, meter, times, stats);
  stats.cluster_count = clusters.size();
  for (const auto& c : clusters) {
    stats.largest_cluster = std::max(stats.largest_cluster, c.size());
  }
  DBIndex index = index_clusters(g, window, clusters, params, meter, times);
  fold_times(times, stats);
  stats.peak_window_entries = meter.peak();
  stats.total_seconds = seconds_since(start);
  if (stats_out) *stats_out = stats;
  return index;
}

}  // namespace

const char* to_string(BuildStrategy s) {
  return s == BuildStrategy::kMC ? "mc" : "emc";
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kCoverage:
      return "coverage";
    case ViolationKind::kDisjointness:
      return "disjointness";
    case ViolationKind::kDuplicateBlock:
      return "duplicate_block";
    case ViolationKind::kMalformedBlock:
      return "malformed_block";
    case ViolationKind::kShape:
      return "shape";
  }
  return "?";
}

DBIndex::DBIndex(std::size_t vertex_count, WindowSpec window, BuildParams params,
                 std::uint64_t graph_fingerprint)
    : window_(window),
      params_(params),
      fingerprint_(graph_fingerprint),
      link_offsets_(vertex_count + 1, 0) {}

std::size_t DBIndex::dense_block_count() const {
  std::vector<std::uint32_t> owners(block_count(), 0);
  for (BlockId b : link_ids_) ++owners[b];
  std::size_t dense = 0;
  for (BlockId b = 0; b < block_count(); ++b) {
    if (owners[b] >= 2 && block(b).size() >= 2) ++dense;
  }
  return dense;
}

// Two IDs per multiply step; only used for the in-memory dedup table.
std::uint64_t DBIndex::hash_members(std::span<const VertexId> members) {
  std::uint64_t h = mix64(members.size());
  std::size_t i = 0;
  for (; i + 2 <= members.size(); i += 2) {
    const std::uint64_t word = (std::uint64_t{members[i]} << 32) | members[i + 1];
    h = std::rotl((h ^ word) * 0x9e3779b97f4a7c15ULL, 29);
  }
  if (i < members.size()) h = std::rotl((h ^ members[i]) * 0x9e3779b97f4a7c15ULL, 29);
  return mix64(h);
}

std::optional<BlockId> DBIndex::find_block(std::span<const VertexId> members,
                                           std::uint64_t hash) const {
  auto [lo, hi] = by_hash_.equal_range(hash);
  for (auto it = lo; it != hi; ++it) {
    auto existing = block(it->second);
    if (std::equal(existing.begin(), existing.end(), members.begin(), members.end())) {
      return it->second;
    }
  }
  return std::nullopt;
}

std::optional<BlockId> DBIndex::find_block(std::span<const VertexId> members) const {
  return find_block(members, hash_members(members));
}

BlockId DBIndex::add_block(std::span<const VertexId> members) {
  const std::uint64_t hash = hash_members(members);
  if (auto found = find_block(members, hash)) return *found;
  const auto id = static_cast<BlockId>(block_count());
  block_members_.insert(block_members_.end(), members.begin(), members.end());
  block_offsets_.push_back(block_members_.size());
  by_hash_.emplace(hash, id);
  return id;
}

void DBIndex::add_links(std::span<const std::pair<VertexId, BlockId>> links) {
  if (links.empty()) return;
  const std::size_t n = vertex_count();
  std::vector<std::uint64_t> added(n + 1, 0);
  for (const auto& [v, b] : links) ++added[v + 1];
  for (std::size_t v = 0; v < n; ++v) added[v + 1] += added[v];

  // Walk vertices from the back so existing links move at most once, in place.
  const std::size_t old_size = link_ids_.size();
  link_ids_.resize(old_size + links.size());
  for (std::size_t v = n; v-- > 0;) {
    const std::uint64_t begin = link_offsets_[v];
    const std::uint64_t end = link_offsets_[v + 1];
    const std::uint64_t shift = added[v];
    if (shift != 0) {
      std::copy_backward(link_ids_.begin() + begin, link_ids_.begin() + end,
                         link_ids_.begin() + end + shift);
    }
    link_offsets_[v + 1] = end + added[v + 1];
  }
  // Each vertex's new links go right after its moved ones.
  std::vector<std::uint64_t> cursor(n);
  for (std::size_t v = 0; v < n; ++v) {
    cursor[v] = link_offsets_[v + 1] - (added[v + 1] - added[v]);
  }
  for (const auto& [v, b] : links) link_ids_[cursor[v]++] = b;
}

void DBIndex::add_link(VertexId v, BlockId b) {
  const std::pair<VertexId, BlockId> one{v, b};
  add_links(std::span(&one, 1));
}

DBIndex build_mc(const Graph& g, const WindowSpec& window, BuildParams params,
                 BuildStats* stats) {
  window.check(g);
  params.strategy = BuildStrategy::kMC;
  return build_clustered(g, window, window, params, stats);
}

DBIndex build_emc(const Graph& g, const WindowSpec& window, BuildParams params,
                  BuildStats* stats) {
  window.check(g);
  if (window.kind != WindowKind::kKHop || window.k < 2) {
    throw UsageError("emc requires a k-hop window with k >= 2");
  }
  if (params.cluster_hops == 0 || params.cluster_hops >= window.k) {
    throw UsageError("emc clustering hops must be in [1, k)");
  }
  params.strategy = BuildStrategy::kEMC;
  return build_clustered(g, window,
                         WindowSpec::khop(params.cluster_hops, window.direction),
                         params, stats);
}

DBIndex build_dbindex(const Graph& g, const WindowSpec& window,
                      const BuildParams& params, BuildStats* stats) {
  return params.strategy == BuildStrategy::kMC ? build_mc(g, window, params, stats)
                                               : build_emc(g, window, params, stats);
}

DBIndex build_from_clusters(const Graph& g, const WindowSpec& window,
                            const std::vector<std::vector<VertexId>>& clusters,
                            BuildParams params, BuildStats* stats_out) {
  window.check(g);
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  for (const auto& c : clusters) {
    for (VertexId v : c) {
      if (!g.has_vertex(v) || seen[v]) {
        throw UsageError("clusters must partition the vertex set");
      }
      seen[v] = 1;
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw UsageError("clusters must partition the vertex set");
  }
  const auto start = Clock::now();
  params.threads = std::max(1u, params.threads);
  BuildStats stats;
  WindowMeter meter;
  std::vector<WorkerTimes> times(params.threads);
  stats.cluster_count = clusters.size();
  for (const auto& c : clusters) {
    stats.largest_cluster = std::max(stats.largest_cluster, c.size());
  }
  DBIndex index = index_clusters(g, window, clusters, params, meter, times);
  fold_times(times, stats);
  stats.peak_window_entries = meter.peak();
  stats.total_seconds = seconds_since(start);
  if (stats_out) *stats_out = stats;
  return index;
}

ResultTable evaluate(const DBIndex& index, const AttributeTable& attrs,
                     const AggregateSpec& aggregate, EvalOptions options) {
  if (aggregate.function != AggregateFunction::kCount &&
      attrs.vertex_count() != index.vertex_count()) {
    throw UsageError("attribute table does not match the index's vertex count");
  }
  ResultTable result;
  result.values.resize(index.vertex_count());
  std::uint64_t add_ops = 0;
  double phase_one = 0;
  double phase_two = 0;

  dispatch_aggregate(aggregate, attrs, [&](auto k, auto column) {
    using K = decltype(k);
    using State = typename K::State;
    std::vector<State> partials(index.block_count(), K::identity());

    auto t0 = Clock::now();
    parallel_for(index.block_count(), options.threads,
                 [&](std::size_t begin, std::size_t end, unsigned) {
                   for (std::size_t b = begin; b < end; ++b) {
                     State s = K::identity();
                     for (VertexId x : index.block(static_cast<BlockId>(b))) {
                       kernel::add_vertex<K>(s, column, x);
                     }
                     partials[b] = s;
                   }
                 });
    phase_one = seconds_since(t0);

    t0 = Clock::now();
    parallel_for(index.vertex_count(), options.threads,
                 [&](std::size_t begin, std::size_t end, unsigned) {
                   for (std::size_t v = begin; v < end; ++v) {
                     State s = K::identity();
                     for (BlockId b : index.links(static_cast<VertexId>(v))) {
                       K::merge(s, partials[b]);
                     }
                     result.values[v] = K::finalize(s);
                   }
                 });
    phase_two = seconds_since(t0);
  });

  if (options.stats) {
    add_ops = index.block_member_count() - index.block_count();
    for (VertexId v = 0; v < index.vertex_count(); ++v) {
      if (!index.links(v).empty()) add_ops += index.links(v).size() - 1;
    }
    options.stats->add_ops = add_ops;
    options.stats->phase_one_seconds = phase_one;
    options.stats->phase_two_seconds = phase_two;
  }
  return result;
}

ValidationReport validate(const DBIndex& index, const Graph& g, const WindowSpec& window) {
  ValidationReport report;
  auto fail = [&](ViolationKind kind, VertexId v, BlockId b, std::string msg) {
    report.violations.push_back({kind, v, b, std::move(msg)});
  };
  if (index.vertex_count() != g.vertex_count()) {
    fail(ViolationKind::kShape, kNoVertex, 0,
         "index covers " + std::to_string(index.vertex_count()) +
             " vertices, graph has " + std::to_string(g.vertex_count()));
    return report;
  }
  if (!(index.window_spec() == window)) {
    fail(ViolationKind::kShape, kNoVertex, 0,
         "index was built for " + index.window_spec().describe());
  }
  window.check(g);

  const std::size_t n = g.vertex_count();
  std::vector<std::uint8_t> block_ok(index.block_count(), 1);
  std::unordered_multimap<std::uint64_t, BlockId> by_hash;
  for (BlockId b = 0; b < index.block_count(); ++b) {
    auto members = index.block(b);
    bool ok = !members.empty();
    for (std::size_t i = 0; ok && i < members.size(); ++i) {
      ok = members[i] < n && (i == 0 || members[i - 1] < members[i]);
    }
    if (!ok) {
      block_ok[b] = 0;
      fail(ViolationKind::kMalformedBlock, kNoVertex, b,
           "block is empty, unsorted, or out of range");
      continue;
    }
    std::uint64_t h = mix64(members.size());
    for (VertexId x : members) h = hash_combine(h, x);
    auto [lo, hi] = by_hash.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      auto other = index.block(it->second);
      if (std::equal(other.begin(), other.end(), members.begin(), members.end())) {
        fail(ViolationKind::kDuplicateBlock, kNoVertex, b,
             "duplicates block " + std::to_string(it->second));
        break;
      }
    }
    by_hash.emplace(h, b);
  }

  WindowEnumerator windows(g, window);
  std::vector<std::uint32_t> covered(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    bool disjoint = true;
    std::vector<VertexId> touched;
    for (BlockId b : index.links(v)) {
      if (b >= index.block_count() || !block_ok[b]) {
        fail(ViolationKind::kShape, v, b, "link to a missing or malformed block");
        continue;
      }
      for (VertexId x : index.block(b)) {
        if (covered[x]++ == 0) {
          touched.push_back(x);
        } else {
          disjoint = false;
        }
      }
    }
    if (!disjoint) {
      fail(ViolationKind::kDisjointness, v, 0, "linked blocks overlap");
    }
    auto members = windows.window(v);
    bool covers = touched.size() == members.size();
    for (VertexId x : members) covers = covers && covered[x] > 0;
    if (!covers) {
      fail(ViolationKind::kCoverage, v, 0,
           "linked blocks cover " + std::to_string(touched.size()) +
               " vertices, window has " + std::to_string(members.size()));
    }
    for (VertexId x : touched) covered[x] = 0;
  }
  return report;
}

}  // namespace gwin
