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

#include "gwin/graph.hpp"
#include "gwin/hash.hpp"

namespace gwin {

// Sequence of m minimum hash values, one per hash function.
using Signature = std::vector<std::uint64_t>;

// i-th member of the hash family: a seeded multiply-xor-shift mix.
inline std::uint64_t vertex_hash(VertexId x, std::uint64_t seed) {
  return mix64(static_cast<std::uint64_t>(x) * 0x9e3779b97f4a7c15ULL ^ seed);
}

// m per-function seeds derived from one base seed.
std::vector<std::uint64_t> derive_seeds(std::uint64_t seed, std::size_t m);

// Writes min_{x in set} h_i(x) into out[i] for every seed. Throws UsageError
// on an empty set or when out.size() != seeds.size().
void minhash_into(std::span<const VertexId> set,
                  std::span<const std::uint64_t> seeds,
                  std::span<std::uint64_t> out);

Signature minhash_signature(std::span<const VertexId> set,
                            std::span<const std::uint64_t> seeds);

// |a ∩ b| / |a ∪ b| for sorted duplicate-free ranges; 1 for two empty sets.
double jaccard(std::span<const VertexId> a, std::span<const VertexId> b);

}  // namespace gwin
