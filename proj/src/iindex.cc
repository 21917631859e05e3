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

#include "gwin/iindex.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <string>
#include <unordered_map>

#include "gwin/index_io.hpp"
#include "gwin/traversal.hpp"

namespace gwin {
namespace {

using Clock = std::chrono::steady_clock;

// A window kept for the children still to be scanned: sorted IDs when small,
// a bitset over all vertices otherwise.
struct StoredWindow {
  std::vector<VertexId> ids;
  std::vector<std::uint64_t> bits;

  void merge_into(std::vector<std::uint64_t>& scratch) const {
    if (!bits.empty()) {
      for (std::size_t i = 0; i < bits.size(); ++i) scratch[i] |= bits[i];
    } else {
      for (VertexId x : ids) scratch[x >> 6] |= std::uint64_t{1} << (x & 63);
    }
  }
  void remove_from(std::vector<std::uint64_t>& scratch) const {
    if (!bits.empty()) {
      for (std::size_t i = 0; i < bits.size(); ++i) scratch[i] &= ~bits[i];
    } else {
      for (VertexId x : ids) scratch[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
    }
  }
  void release() {
    ids = {};
    bits = {};
  }
};

std::uint64_t popcount(const std::vector<std::uint64_t>& bits) {
  std::uint64_t total = 0;
  for (auto w : bits) total += std::popcount(w);
  return total;
}

template <class F>
void for_each_bit(const std::vector<std::uint64_t>& bits, F&& f) {
  for (std::size_t i = 0; i < bits.size(); ++i) {
    for (std::uint64_t w = bits[i]; w != 0; w &= w - 1) {
      f(static_cast<VertexId>(i * 64 + std::countr_zero(w)));
    }
  }
}

// pid = in-neighbor with the largest window; in-neighbors come sorted, so
// the strict comparison keeps the smallest ID on ties.
template <class Card>
VertexId choose_parent(std::span<const VertexId> parents, Card&& card) {
  VertexId pid = kNoVertex;
  std::uint64_t best = 0;
  for (VertexId p : parents) {
    if (pid == kNoVertex || card(p) > best) {
      pid = p;
      best = card(p);
    }
  }
  return pid;
}

void require_dag_input(const Graph& g) {
  if (!g.directed()) throw UsageError("the I-Index requires a directed graph");
}

std::string edge_name(const Graph& g, Edge e) {
  return std::to_string(g.label(e.source)) + " " + std::to_string(g.label(e.target));
}

}  // namespace

IIndex::IIndex(std::vector<IIndexEntry> entries, std::uint64_t graph_fingerprint)
    : entries_(std::move(entries)), fingerprint_(graph_fingerprint) {
  derive();
}

void IIndex::derive() {
  const std::size_t n = entries_.size();
  std::vector<std::vector<VertexId>> children(n);
  order_.clear();
  order_.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    const VertexId p = entries_[v].pid;
    if (p == kNoVertex) {
      order_.push_back(v);
    } else if (p >= n || p == v) {
      throw FormatError("pid of vertex " + std::to_string(v) + " is invalid");
    } else {
      children[p].push_back(v);
    }
  }
  cardinality_.assign(n, 0);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    const VertexId v = order_[i];
    const VertexId p = entries_[v].pid;
    cardinality_[v] = 1 + entries_[v].wd.size() + (p == kNoVertex ? 0 : cardinality_[p]);
    for (VertexId c : children[v]) order_.push_back(c);
  }
  if (order_.size() != n) throw FormatError("pid links form a cycle");
}

std::uint64_t IIndex::wd_entry_count() const {
  std::uint64_t total = 0;
  for (const auto& e : entries_) total += e.wd.size();
  return total;
}

IIndex build_iindex(const Graph& g, IIndexBuildStats* stats) {
  const auto start = Clock::now();
  require_dag_input(g);
  const auto topo = topological_order(g);
  const std::size_t n = g.vertex_count();
  const std::size_t words = (n + 63) / 64;

  std::vector<IIndexEntry> entries(n);
  std::vector<std::uint64_t> card(n, 0);
  std::vector<StoredWindow> stored(n);
  std::vector<std::uint32_t> pending(n, 0);
  std::vector<std::uint64_t> scratch(words);
  std::size_t live = 0;
  std::size_t peak = 0;

  for (VertexId v : topo) {
    std::fill(scratch.begin(), scratch.end(), 0);
    scratch[v >> 6] |= std::uint64_t{1} << (v & 63);
    const auto parents = g.in_neighbors(v);
    for (VertexId p : parents) stored[p].merge_into(scratch);
    card[v] = popcount(scratch);

    const VertexId pid = choose_parent(parents, [&](VertexId p) { return card[p]; });
    entries[v].pid = pid;
    if (pid != kNoVertex) {
      // Collect wd before storing so scratch still holds W(v) afterwards.
      std::vector<std::uint64_t> diff = scratch;
      stored[pid].remove_from(diff);
      diff[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
      for_each_bit(diff, [&](VertexId x) { entries[v].wd.push_back(x); });
    }

    if (!g.out_neighbors(v).empty()) {
      pending[v] = static_cast<std::uint32_t>(g.out_neighbors(v).size());
      if (card[v] * 32 < n) {
        stored[v].ids.reserve(card[v]);
        for_each_bit(scratch, [&](VertexId x) { stored[v].ids.push_back(x); });
      } else {
        stored[v].bits = scratch;
      }
      peak = std::max(peak, ++live);
    }
    for (VertexId p : parents) {
      if (--pending[p] == 0) {
        stored[p].release();
        --live;
      }
    }
  }

  IIndex index(std::move(entries), g.fingerprint());
  if (stats) {
    stats->seconds = std::chrono::duration<double>(Clock::now() - start).count();
    stats->peak_live_windows = peak;
  }
  return index;
}

VertexSet materialize_window(const IIndex& index, VertexId v) {
  if (v >= index.vertex_count()) {
    throw UsageError("vertex " + std::to_string(v) + " out of range");
  }
  std::vector<VertexId> out;
  out.reserve(index.window_cardinality(v));
  for (VertexId x = v; x != kNoVertex; x = index.entry(x).pid) {
    out.push_back(x);
    const auto& wd = index.entry(x).wd;
    out.insert(out.end(), wd.begin(), wd.end());
  }
  return VertexSet(std::move(out));
}

ResultTable evaluate(const IIndex& index, const AttributeTable& attrs,
                     const AggregateSpec& aggregate, EvalOptions options) {
  if (aggregate.function != AggregateFunction::kCount &&
      attrs.vertex_count() != index.vertex_count()) {
    throw UsageError("attribute table does not match the index's vertex count");
  }
  const auto start = Clock::now();
  ResultTable result;
  result.values.resize(index.vertex_count());
  dispatch_aggregate(aggregate, attrs, [&](auto k, auto column) {
    using K = decltype(k);
    std::vector<typename K::State> partial(index.vertex_count(), K::identity());
    for (VertexId v : index.evaluation_order()) {
      const auto& e = index.entry(v);
      auto& s = partial[v];
      kernel::add_vertex<K>(s, column, v);
      if (e.pid != kNoVertex) K::merge(s, partial[e.pid]);
      for (VertexId x : e.wd) kernel::add_vertex<K>(s, column, x);
      result.values[v] = K::finalize(s);
    }
  });
  if (options.stats) {
    std::uint64_t ops = index.wd_entry_count();
    for (const auto& e : index.entries()) ops += e.pid != kNoVertex;
    options.stats->add_ops = ops;
    options.stats->phase_one_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    options.stats->phase_two_seconds = 0;
  }
  return result;
}

Graph apply_edge_update(IIndex& index, const Graph& g, Edge edge, bool insert,
                        IIndexUpdateStats* stats_out) {
  require_dag_input(g);
  if (index.vertex_count() != g.vertex_count()) {
    throw UsageError("index does not match the graph's vertex count");
  }
  const VertexId s = edge.source;
  const VertexId t = edge.target;
  if (!g.has_vertex(s) || !g.has_vertex(t)) {
    throw UsageError("edge endpoint out of range");
  }
  IIndexUpdateStats stats;
  Graph updated;
  if (insert) {
    if (s == t) throw UsageError("self-loops are not allowed");
    if (g.has_edge(s, t)) throw UsageError("edge " + edge_name(g, edge) + " already exists");
    Traversal reach(g);
    for (VertexId x : reach.reachable(t, Direction::kOut)) {
      if (x == s) throw CycleError(s, "edge " + edge_name(g, edge) + " would create a cycle");
    }
    updated = g.with_edge(s, t);
  } else {
    if (!g.has_edge(s, t)) throw UsageError("edge " + edge_name(g, edge) + " does not exist");
    stats.parent_removed = index.entries_[t].pid == s;
    updated = g.without_edge(s, t);
  }

  // Affected vertices: t and its descendants (the same before and after,
  // since the edge enters t), visited in topological order.
  Traversal reach(updated);
  const auto below = reach.reachable(t, Direction::kOut);
  std::vector<std::uint8_t> affected(updated.vertex_count(), 0);
  for (VertexId x : below) affected[x] = 1;
  stats.affected = below.size();
  std::vector<VertexId> order;
  order.reserve(below.size());
  for (VertexId x : topological_order(updated)) {
    if (affected[x]) order.push_back(x);
  }

  std::vector<std::uint8_t> changed(updated.vertex_count(), 0);
  std::unordered_map<VertexId, std::vector<VertexId>> fresh;
  auto window_of = [&](VertexId p) -> std::vector<VertexId> {
    if (auto it = fresh.find(p); it != fresh.end()) return it->second;
    return materialize_window(index, p).vector();
  };

  for (VertexId x : order) {
    const auto parents = updated.in_neighbors(x);
    const bool dirty = x == t || std::any_of(parents.begin(), parents.end(),
                                             [&](VertexId p) { return changed[p]; });
    if (!dirty) {
      ++stats.skipped;
      continue;
    }
    ++stats.recomputed;
    std::vector<VertexId> w{x};
    for (VertexId p : parents) {
      const auto pw = window_of(p);
      w.insert(w.end(), pw.begin(), pw.end());
    }
    std::sort(w.begin(), w.end());
    w.erase(std::unique(w.begin(), w.end()), w.end());

    IIndexEntry entry;
    entry.pid = choose_parent(parents, [&](VertexId p) { return index.cardinality_[p]; });
    if (entry.pid != kNoVertex) {
      const auto pw = window_of(entry.pid);
      std::set_difference(w.begin(), w.end(), pw.begin(), pw.end(),
                          std::back_inserter(entry.wd));
      std::erase(entry.wd, x);
    }
    if (entry.pid != index.entries_[x].pid) ++stats.parent_changes;
    changed[x] = w.size() != index.cardinality_[x];
    index.cardinality_[x] = w.size();
    index.entries_[x] = std::move(entry);
    fresh.emplace(x, std::move(w));
  }

  index.derive();
  index.fingerprint_ = updated.fingerprint();
  if (stats_out) *stats_out = stats;
  return updated;
}

IIndexSizeReport index_size_report(const IIndex& index, const Graph& g) {
  IIndexSizeReport r;
  r.wd_entries = index.wd_entry_count();
  r.index_bytes = serialize(index).size();
  r.graph_bytes = serialize_graph(g).size();
  r.ratio = r.graph_bytes == 0 ? 0.0
                               : static_cast<double>(r.index_bytes) /
                                     static_cast<double>(r.graph_bytes);
  return r;
}

}  // namespace gwin
