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

#include "gwin/minhash.hpp"

#include <algorithm>
#include <limits>

#include "gwin/error.hpp"

namespace gwin {

std::vector<std::uint64_t> derive_seeds(std::uint64_t seed, std::size_t m) {
  SplitMix64 stream(seed);
  std::vector<std::uint64_t> out(m);
  for (auto& s : out) s = stream.next();
  return out;
}

void minhash_into(std::span<const VertexId> set,
                  std::span<const std::uint64_t> seeds,
                  std::span<std::uint64_t> out) {
  if (set.empty()) throw UsageError("min-hash of an empty set is undefined");
  if (out.size() != seeds.size()) {
    throw UsageError("signature length does not match the seed count");
  }
  std::fill(out.begin(), out.end(), std::numeric_limits<std::uint64_t>::max());
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    const std::uint64_t seed = seeds[i];
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (VertexId x : set) best = std::min(best, vertex_hash(x, seed));
    out[i] = best;
  }
}

Signature minhash_signature(std::span<const VertexId> set,
                            std::span<const std::uint64_t> seeds) {
  Signature sig(seeds.size());
  minhash_into(set, seeds, sig);
  return sig;
}

double jaccard(std::span<const VertexId> a, std::span<const VertexId> b) {
  if (a.empty() && b.empty()) return 1.0;
  std::size_t i = 0, j = 0, common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(common) /
         static_cast<double>(a.size() + b.size() - common);
}

}  // namespace gwin
