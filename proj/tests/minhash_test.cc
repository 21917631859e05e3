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

#include <gtest/gtest.h>

#include <cmath>

#include "gwin/error.hpp"
#include "gwin/minhash.hpp"
#include "gwin/random.hpp"

namespace gwin {
namespace {

TEST(MinHashTest, EqualSetsGiveEqualSignatures) {
  const auto seeds = derive_seeds(42, 4);
  const std::vector<VertexId> a = {5, 1, 9, 3};
  const std::vector<VertexId> b = {9, 3, 5, 1};
  EXPECT_EQ(minhash_signature(a, seeds), minhash_signature(b, seeds));
}

TEST(MinHashTest, SingletonIsRawHashes) {
  const auto seeds = derive_seeds(42, 4);
  const std::vector<VertexId> one = {17};
  const auto sig = minhash_signature(one, seeds);
  ASSERT_EQ(sig.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(sig[i], vertex_hash(17, seeds[i]));
}

TEST(MinHashTest, EmptySetThrows) {
  const auto seeds = derive_seeds(1, 2);
  EXPECT_THROW(minhash_signature(std::vector<VertexId>{}, seeds), UsageError);
}

TEST(MinHashTest, SeedsAreDistinctAndDeterministic) {
  const auto s = derive_seeds(7, 16);
  EXPECT_EQ(s, derive_seeds(7, 16));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) EXPECT_NE(s[i], s[j]);
  }
}

TEST(JaccardTest, Basics) {
  const std::vector<VertexId> a = {1, 2, 3, 4};
  const std::vector<VertexId> b = {3, 4, 5};
  EXPECT_DOUBLE_EQ(jaccard(a, b), 2.0 / 5.0);
  EXPECT_DOUBLE_EQ(jaccard(a, a), 1.0);
  EXPECT_DOUBLE_EQ(jaccard({}, {}), 1.0);
  EXPECT_DOUBLE_EQ(jaccard(a, {}), 0.0);
}

// Per-function collision rate approximates the Jaccard similarity.
TEST(MinHashTest, CollisionRateTracksJaccard) {
  std::vector<VertexId> a, b;
  for (VertexId x = 0; x < 60; ++x) a.push_back(x);
  for (VertexId x = 30; x < 90; ++x) b.push_back(x);
  const double j = jaccard(a, b);  // 30 / 90
  const auto seeds = derive_seeds(2024, 4000);
  const auto sa = minhash_signature(a, seeds);
  const auto sb = minhash_signature(b, seeds);
  std::size_t equal = 0;
  for (std::size_t i = 0; i < seeds.size(); ++i) equal += sa[i] == sb[i];
  const double rate = static_cast<double>(equal) / static_cast<double>(seeds.size());
  EXPECT_NEAR(rate, j, 0.05);
}

}  // namespace
}  // namespace gwin
