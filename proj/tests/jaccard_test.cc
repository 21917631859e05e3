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

#include "fixtures.hpp"
#include "gwin/error.hpp"
#include "gwin/jaccard.hpp"
#include "gwin/minhash.hpp"
#include "gwin/traversal.hpp"

namespace gwin {
namespace {

void Clique(std::size_t n, std::size_t offset, std::vector<Edge>& edges) {
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      edges.push_back({static_cast<VertexId>(u + offset), static_cast<VertexId>(v + offset)});
    }
  }
}

TEST(JaccardProfileTest, CompleteGraphIsOne) {
  std::vector<Edge> edges;
  Clique(6, 0, edges);
  const auto g = Graph::from_edges(6, Directedness::kUndirected, edges);
  const auto p = jaccard_profile(g, 3, 100, 1, Direction::kUndirected);
  ASSERT_EQ(p.rows.size(), 3u);
  for (const auto& row : p.rows) {
    EXPECT_DOUBLE_EQ(row.median, 1.0);
    EXPECT_DOUBLE_EQ(row.min, 1.0);
    EXPECT_EQ(row.samples, 15u);
  }
}

// Windows of two vertices in different cliques never meet.
TEST(JaccardProfileTest, DisjointCliquesDoNotOverlap) {
  std::vector<Edge> edges;
  Clique(4, 0, edges);
  Clique(4, 4, edges);
  const auto g = Graph::from_edges(8, Directedness::kUndirected, edges);
  for (unsigned k = 1; k <= 3; ++k) {
    const auto a = khop_window(g, 0, k, Direction::kUndirected);
    const auto b = khop_window(g, 5, k, Direction::kUndirected);
    EXPECT_DOUBLE_EQ(jaccard(a.ids(), b.ids()), 0.0);
  }
}

TEST(JaccardProfileTest, ErdosRenyiTrendIncreases) {
  const auto g = generate_random_graph(2000, 8, 3);
  const auto p = jaccard_profile(g, 3, 1000, 9, Direction::kUndirected);
  ASSERT_EQ(p.rows.size(), 3u);
  EXPECT_EQ(p.rows[0].samples, 1000u);
  EXPECT_LE(p.rows[0].median, p.rows[1].median);
  EXPECT_LE(p.rows[1].median, p.rows[2].median);
  for (const auto& row : p.rows) {
    EXPECT_LE(row.min, row.median);
    EXPECT_LE(row.median, row.max);
  }
}

TEST(JaccardProfileTest, RejectsBadArguments) {
  const auto g = generate_random_graph(50, 4, 1);
  EXPECT_THROW(jaccard_profile(g, 0, 10, 1, Direction::kUndirected), UsageError);
  EXPECT_THROW(jaccard_profile(g, 2, 10, 1, Direction::kOut), UsageError);
}

}  // namespace
}  // namespace gwin
