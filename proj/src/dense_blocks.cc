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

#include "gwin/dense_blocks.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

#include "gwin/minhash.hpp"

namespace gwin {
namespace {

constexpr std::uint32_t kNone = 0xffffffffu;

struct EquivalenceClass {
  std::vector<VertexId> members;
  std::vector<VertexId> owners;
  // Indices of the owners' windows, ascending.
  std::vector<std::uint32_t> slots;
  bool dense() const { return members.size() >= 2 && owners.size() >= 2; }
};

// Per-thread scratch indexed by vertex ID. Entries are valid only when their
// stamp matches the current epoch, so nothing is cleared between calls.
struct Scratch {
  std::vector<std::uint32_t> stamp;
  std::vector<std::uint32_t> value;
  std::vector<std::uint64_t> mask;
  std::vector<std::uint64_t> bits;
  std::uint32_t epoch = 0;

  void next_epoch(VertexId max_id) {
    if (stamp.size() <= max_id) {
      stamp.resize(std::size_t{max_id} + 1, 0);
      value.resize(std::size_t{max_id} + 1, 0);
    }
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

// Sorts distinct IDs. Large sets over a narrow ID range go through a bitmap,
// which beats a comparison sort once the set fills a few bits per word.
void sort_distinct(std::vector<VertexId>& ids) {
  if (ids.size() < 64) {
    std::sort(ids.begin(), ids.end());
    return;
  }
  const VertexId max_id = *std::max_element(ids.begin(), ids.end());
  const std::size_t words = std::size_t{max_id} / 64 + 1;
  if (words > ids.size() * 4) {
    std::sort(ids.begin(), ids.end());
    return;
  }
  auto& bits = scratch().bits;
  bits.assign(words, 0);
  for (VertexId x : ids) bits[x >> 6] |= std::uint64_t{1} << (x & 63);
  std::size_t out = 0;
  for (std::size_t w = 0; w < words; ++w) {
    for (std::uint64_t b = bits[w]; b != 0; b &= b - 1) {
      ids[out++] = static_cast<VertexId>(w * 64 + std::countr_zero(b));
    }
  }
}

// Up to 64 windows: the cover of a node is a bit mask over window slots, built
// in one pass and grouped through a small open-addressing table. Produces the
// same classes, in the same order, as the general path.
std::vector<EquivalenceClass> partition_by_mask(const std::vector<OwnedWindow>& windows,
                                                VertexId max_id,
                                                std::vector<VertexId>& sorted,
                                                std::vector<std::uint32_t>& sorted_class) {
  // Masks are zero outside this call: set here, cleared once grouped.
  auto& mask = scratch().mask;
  if (mask.size() <= max_id) mask.resize(std::size_t{max_id} + 1, 0);
  sorted.clear();
  for (std::uint32_t oi = 0; oi < windows.size(); ++oi) {
    const std::uint64_t bit = std::uint64_t{1} << oi;
    for (VertexId x : windows[oi].members) {
      if (mask[x] == 0) sorted.push_back(x);
      mask[x] |= bit;
    }
  }
  sort_distinct(sorted);

  const std::size_t capacity = std::bit_ceil(sorted.size() * 2);
  std::vector<std::uint64_t> keys(capacity, 0);
  std::vector<std::uint32_t> ids(capacity, kNone);
  std::vector<std::uint64_t> class_mask;
  std::vector<std::uint32_t> sizes;
  sorted_class.resize(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::uint64_t m = std::exchange(mask[sorted[i]], 0);
    std::size_t h = mix64(m) & (capacity - 1);
    while (ids[h] != kNone && keys[h] != m) h = (h + 1) & (capacity - 1);
    if (ids[h] == kNone) {
      keys[h] = m;
      ids[h] = static_cast<std::uint32_t>(sizes.size());
      class_mask.push_back(m);
      sizes.push_back(0);
    }
    ++sizes[ids[h]];
    sorted_class[i] = ids[h];
  }

  std::vector<EquivalenceClass> classes(sizes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    auto& cls = classes[c];
    cls.members.reserve(sizes[c]);
    for (std::uint64_t b = class_mask[c]; b != 0; b &= b - 1) {
      const auto slot = static_cast<std::uint32_t>(std::countr_zero(b));
      cls.slots.push_back(slot);
      cls.owners.push_back(windows[slot].owner);
    }
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    classes[sorted_class[i]].members.push_back(sorted[i]);
  }
  return classes;
}

// Partition refinement: start with every node in one class and split each
// class by membership in one owner's window at a time. A class's covering
// owner set is the chain of owners that created it. `sorted` receives the
// union of the windows in ascending order and `sorted_class` the class of
// each of its nodes.
std::vector<EquivalenceClass> partition_by_cover(const std::vector<OwnedWindow>& windows,
                                                 std::vector<VertexId>& sorted,
                                                 std::vector<std::uint32_t>& sorted_class) {
  std::size_t mass = 0;
  VertexId max_id = 0;
  for (const auto& w : windows) {
    mass += w.members.size();
    for (VertexId x : w.members) max_id = std::max(max_id, x);
  }
  if (windows.size() <= 64) return partition_by_mask(windows, max_id, sorted, sorted_class);
  Scratch& local = scratch();
  local.next_epoch(max_id);
  std::vector<std::uint32_t> local_flat;
  local_flat.reserve(mass);
  std::vector<VertexId> content;
  for (const auto& w : windows) {
    for (VertexId x : w.members) {
      if (local.stamp[x] != local.epoch) {
        local.stamp[x] = local.epoch;
        local.value[x] = static_cast<std::uint32_t>(content.size());
        content.push_back(x);
      }
      local_flat.push_back(local.value[x]);
    }
  }

  std::vector<std::uint32_t> class_of(content.size(), 0);
  std::vector<std::uint32_t> parent{kNone};
  std::vector<std::uint32_t> creator{kNone};
  std::vector<std::uint32_t> split_to{kNone};
  std::vector<std::uint32_t> split_stamp{kNone};
  std::size_t pos = 0;
  for (std::uint32_t oi = 0; oi < windows.size(); ++oi) {
    for (std::size_t j = 0; j < windows[oi].members.size(); ++j, ++pos) {
      const std::uint32_t l = local_flat[pos];
      const std::uint32_t c = class_of[l];
      if (split_stamp[c] != oi) {
        split_stamp[c] = oi;
        split_to[c] = static_cast<std::uint32_t>(parent.size());
        parent.push_back(c);
        creator.push_back(oi);
        split_to.push_back(kNone);
        split_stamp.push_back(kNone);
      }
      class_of[l] = split_to[c];
    }
  }

  // Renumber live classes in order of their smallest member, sizing each
  // class before filling it.
  sorted = std::move(content);
  sort_distinct(sorted);
  std::vector<std::uint32_t> dense_id(parent.size(), kNone);
  std::vector<std::uint32_t> sizes;
  for (VertexId x : sorted) {
    std::uint32_t& id = dense_id[class_of[local.value[x]]];
    if (id == kNone) {
      id = static_cast<std::uint32_t>(sizes.size());
      sizes.push_back(0);
    }
    ++sizes[id];
  }
  std::vector<EquivalenceClass> classes(sizes.size());
  sorted_class.resize(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::uint32_t c = class_of[local.value[sorted[i]]];
    sorted_class[i] = dense_id[c];
    EquivalenceClass& cls = classes[dense_id[c]];
    if (cls.members.empty()) {
      cls.members.reserve(sizes[dense_id[c]]);
      for (std::uint32_t a = c; a != 0; a = parent[a]) cls.slots.push_back(creator[a]);
      std::reverse(cls.slots.begin(), cls.slots.end());
      cls.owners.reserve(cls.slots.size());
      for (std::uint32_t slot : cls.slots) cls.owners.push_back(windows[slot].owner);
    }
    cls.members.push_back(sorted[i]);
  }
  return classes;
}

void emit(EquivalenceClass&& c, unsigned depth, std::vector<EmittedBlock>& out) {
  const bool dense = c.dense();
  out.push_back({std::move(c.members), std::move(c.owners), dense, depth});
}

void drop_empty(std::vector<OwnedWindow>& windows) {
  std::erase_if(windows, [](const OwnedWindow& w) { return w.members.empty(); });
  std::sort(windows.begin(), windows.end(),
            [](const OwnedWindow& a, const OwnedWindow& b) { return a.owner < b.owner; });
}

}  // namespace

std::vector<std::vector<std::uint32_t>> group_by_signature(
    const std::vector<std::uint64_t>& signatures, std::size_t m, std::size_t count) {
  std::vector<std::uint32_t> idx(count);
  std::iota(idx.begin(), idx.end(), 0);
  auto row = [&](std::uint32_t i) { return signatures.begin() + i * m; };
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto cmp =
        std::lexicographical_compare_three_way(row(a), row(a) + m, row(b), row(b) + m);
    return cmp != 0 ? cmp < 0 : a < b;
  });
  std::vector<std::vector<std::uint32_t>> groups;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i == 0 || !std::equal(row(idx[i - 1]), row(idx[i - 1]) + m, row(idx[i]))) {
      groups.emplace_back();
    }
    groups.back().push_back(idx[i]);
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

void identify_dense_blocks(std::vector<OwnedWindow>&& windows, unsigned depth,
                           const RefineOptions& options,
                           std::vector<EmittedBlock>& out) {
  drop_empty(windows);
  if (windows.empty()) return;
  if (windows.size() == 1) {
    // One window: nothing can be dense, the whole window is a single block.
    auto& w = windows.front();
    if (!std::is_sorted(w.members.begin(), w.members.end())) sort_distinct(w.members);
    out.push_back({std::move(w.members), {w.owner}, false, depth});
    return;
  }

  std::vector<VertexId> sorted;
  std::vector<std::uint32_t> sorted_class;
  auto classes = partition_by_cover(windows, sorted, sorted_class);

  const bool any_dense =
      std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.dense(); });
  if (!any_dense) {
    for (auto& c : classes) emit(std::move(c), depth, out);
    return;
  }

  // Emit dense classes. Whatever is left belongs to the residual windows.
  std::vector<std::uint8_t> removed(classes.size(), 0);
  bool residual_left = false;
  bool shared = false;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].dense()) {
      removed[c] = 1;
      emit(std::move(classes[c]), depth, out);
    } else {
      residual_left = true;
      shared |= classes[c].owners.size() >= 2;
    }
  }
  if (!residual_left) return;

  if (depth + 1 >= options.max_rounds) {
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!removed[c]) emit(std::move(classes[c]), depth, out);
    }
    return;
  }
  if (!shared) {
    // Single-owner residuals are pairwise disjoint, so no two can share a
    // min-hash and refinement would return each one unchanged.
    std::vector<std::uint32_t> by_slot(windows.size(), kNone);
    for (std::size_t c = 0; c < classes.size(); ++c) {
      if (!removed[c]) by_slot[classes[c].slots.front()] = static_cast<std::uint32_t>(c);
    }
    for (std::uint32_t c : by_slot) {
      if (c != kNone) emit(std::move(classes[c]), depth + 1, out);
    }
    return;
  }

  // Rebuild the windows from the remaining classes in node order, so the
  // residuals come out sorted and reuse the windows' storage.
  for (auto& w : windows) w.members.clear();
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const std::uint32_t c = sorted_class[i];
    if (removed[c]) continue;
    for (std::uint32_t slot : classes[c].slots) windows[slot].members.push_back(sorted[i]);
  }
  classes.clear();
  sorted.clear();
  sorted_class.clear();
  refine_cluster(std::move(windows), depth + 1, options, out);
}

void refine_cluster(std::vector<OwnedWindow>&& residual, unsigned depth,
                    const RefineOptions& options, std::vector<EmittedBlock>& out) {
  drop_empty(residual);
  if (residual.empty()) return;
  if (residual.size() == 1) {
    identify_dense_blocks(std::move(residual), depth, options, out);
    return;
  }
  const std::size_t m = std::max<std::uint32_t>(1, options.signature_size);
  const auto seeds = derive_seeds(options.seed ^ mix64(0x726566696e65ULL + depth), m);
  std::vector<std::uint64_t> signatures(residual.size() * m);
  for (std::size_t i = 0; i < residual.size(); ++i) {
    minhash_into(residual[i].members, seeds,
                 std::span<std::uint64_t>(signatures.data() + i * m, m));
  }
  for (auto& group : group_by_signature(signatures, m, residual.size())) {
    std::vector<OwnedWindow> sub;
    sub.reserve(group.size());
    for (std::uint32_t i : group) sub.push_back(std::move(residual[i]));
    identify_dense_blocks(std::move(sub), depth, options, out);
  }
}

}  // namespace gwin
