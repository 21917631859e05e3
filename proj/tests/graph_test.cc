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

#include <sstream>

#include "fixtures.hpp"
#include "gwin/error.hpp"
#include "gwin/graph_io.hpp"
#include "gwin/traversal.hpp"

namespace gwin {
namespace {

using testing::SocialGraph;
using testing::SampleDag;
using testing::Set;
using testing::V;

LoadedGraph Parse(const std::string& text, Directedness d = Directedness::kUndirected) {
  std::istringstream in(text);
  return load_edge_list(in, d);
}

TEST(EdgeListTest, LoadsSimplePath) {
  const auto loaded = Parse("0 1\n1 2");
  EXPECT_EQ(loaded.graph.vertex_count(), 3u);
  EXPECT_EQ(loaded.graph.edge_count(), 2u);
  EXPECT_TRUE(loaded.graph.has_edge(0, 1));
  EXPECT_TRUE(loaded.graph.has_edge(2, 1));
  EXPECT_FALSE(loaded.graph.has_edge(0, 2));
}

TEST(EdgeListTest, DropsDuplicatesAndComments) {
  const auto loaded = Parse("# c\n5 7\n5 7\n7 5");
  EXPECT_EQ(loaded.graph.vertex_count(), 2u);
  EXPECT_EQ(loaded.graph.edge_count(), 1u);
  EXPECT_EQ(loaded.duplicate_edges, 2u);
  EXPECT_EQ(loaded.graph.label(0), 5u);
  EXPECT_EQ(loaded.graph.label(1), 7u);
}

TEST(EdgeListTest, DirectedKeepsBothOrientations) {
  const auto loaded = Parse("1 2\n2 1\n1 2", Directedness::kDirected);
  EXPECT_EQ(loaded.graph.edge_count(), 2u);
  EXPECT_EQ(loaded.duplicate_edges, 1u);
}

TEST(EdgeListTest, CountsSelfLoops) {
  const auto loaded = Parse("3 3\n3 4");
  EXPECT_EQ(loaded.self_loops, 1u);
  EXPECT_EQ(loaded.graph.edge_count(), 1u);
}

TEST(EdgeListTest, ReportsLineOfMalformedInput) {
  try {
    Parse("0 1\n\n2 x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(Parse("0 1 2\n"), ParseError);
  EXPECT_THROW(Parse("-1 2\n"), ParseError);
}

TEST(EdgeListTest, RejectsEmptyInput) {
  EXPECT_THROW(Parse(""), DataError);
  EXPECT_THROW(Parse("# only a comment\n\n"), DataError);
}

TEST(EdgeListTest, RoundTripKeepsIsolatedVertices) {
  auto g = Graph::from_edges(4, Directedness::kDirected, std::vector<Edge>{{0, 2}},
                             {10, 20, 30, 40});
  std::ostringstream out;
  write_edge_list(out, g);
  const auto back = Parse(out.str(), Directedness::kDirected);
  EXPECT_EQ(back.graph.fingerprint(), g.fingerprint());
}

TEST(GraphTest, FromEdgesRejectsBadInput) {
  const std::vector<Edge> loop = {{1, 1}};
  const std::vector<Edge> range = {{0, 5}};
  const std::vector<Edge> dup = {{0, 1}, {1, 0}};
  EXPECT_THROW(Graph::from_edges(2, Directedness::kUndirected, loop), UsageError);
  EXPECT_THROW(Graph::from_edges(2, Directedness::kUndirected, range), UsageError);
  EXPECT_THROW(Graph::from_edges(2, Directedness::kUndirected, dup), UsageError);
  EXPECT_NO_THROW(Graph::from_edges(2, Directedness::kDirected, dup));
}

TEST(GraphTest, WithAndWithoutEdge) {
  const auto g = SocialGraph();
  const auto plus = g.with_edge(V('E'), V('F'));
  EXPECT_EQ(plus.edge_count(), g.edge_count() + 1);
  EXPECT_TRUE(plus.has_edge(V('F'), V('E')));
  EXPECT_EQ(plus.without_edge(V('F'), V('E')).fingerprint(), g.fingerprint());
  EXPECT_NE(plus.fingerprint(), g.fingerprint());
}

TEST(GeneratorTest, SingleIsolatedVertex) {
  const auto g = generate_random_graph(1, 0, 7);
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.edge_count(), 0u);
}

TEST(GeneratorTest, ErdosRenyiHasExactEdgeCount) {
  const auto g = generate_random_graph(1000, 10, 1);
  EXPECT_EQ(g.edge_count(), 5000u);
  std::uint64_t degree_sum = 0;
  for (VertexId v = 0; v < g.vertex_count(); ++v) degree_sum += g.out_neighbors(v).size();
  EXPECT_DOUBLE_EQ(static_cast<double>(degree_sum) / 1000.0, 10.0);
}

TEST(GeneratorTest, Deterministic) {
  EXPECT_EQ(generate_random_graph(1000, 10, 1).edges(),
            generate_random_graph(1000, 10, 1).edges());
  EXPECT_NE(generate_random_graph(1000, 10, 1).edges(),
            generate_random_graph(1000, 10, 2).edges());
  EXPECT_EQ(generate_random_dag(500, 4, 9).edges(), generate_random_dag(500, 4, 9).edges());
}

TEST(GeneratorTest, RejectsImpossibleDensity) {
  EXPECT_THROW(generate_random_graph(10, 10, 1), UsageError);
  EXPECT_THROW(generate_random_graph(10, -1, 1), UsageError);
  EXPECT_THROW(generate_random_dag(4, 2, 1), UsageError);
}

TEST(GeneratorTest, SmallDag) {
  const auto g = generate_random_dag(2, 0.5, 3);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_NO_THROW(require_acyclic(g));
}

TEST(GeneratorTest, LargeDagIsAcyclic) {
  const auto g = generate_random_dag(30000, 10, 5);
  EXPECT_EQ(g.edge_count(), 300000u);
  EXPECT_EQ(topological_order(g).size(), 30000u);
}

TEST(GeneratorTest, IntegerAttributeInRange) {
  const auto col = generate_integer_attribute("x", 500, -3, 3, 4);
  ASSERT_EQ(col.size(), 500u);
  for (auto x : col.integers()) {
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
  }
}

TEST(KHopTest, SocialGraphWindows) {
  const auto g = SocialGraph();
  EXPECT_EQ(khop_window(g, V('E'), 1, Direction::kUndirected), Set("ACE"));
  EXPECT_EQ(khop_window(g, V('E'), 2, Direction::kUndirected), Set("ABCDEF"));
  EXPECT_EQ(khop_window(g, V('B'), 1, Direction::kUndirected), Set("ABDF"));
  EXPECT_EQ(khop_window(g, V('C'), 1, Direction::kUndirected), Set("ACDEF"));
  EXPECT_EQ(khop_window(g, V('A'), 1, Direction::kUndirected), Set("ABCDEF"));
}

TEST(KHopTest, IsolatedVertex) {
  const auto g = Graph::from_edges(3, Directedness::kUndirected, std::vector<Edge>{{0, 1}});
  for (unsigned k = 1; k <= 4; ++k) {
    EXPECT_EQ(khop_window(g, 2, k, Direction::kUndirected), VertexSet({2}));
  }
}

TEST(KHopTest, RejectsBadArguments) {
  const auto g = SocialGraph();
  EXPECT_THROW(khop_window(g, 6, 1, Direction::kUndirected), UsageError);
  EXPECT_THROW(khop_window(g, 0, 0, Direction::kUndirected), UsageError);
  EXPECT_THROW(khop_window(g, 0, 1, Direction::kOut), UsageError);
  EXPECT_THROW(khop_window(SampleDag(), 0, 1, Direction::kUndirected), UsageError);
}

// Property: the BFS window equals the Floyd-Warshall ball, is monotone in k,
// and always contains the focal vertex.
TEST(KHopTest, MatchesDistanceOracle) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const bool directed = seed % 2 == 0;
    const auto g = generate_random_graph(
        60, 3, seed, directed ? Directedness::kDirected : Directedness::kUndirected);
    const std::vector<Direction> dirs =
        directed ? std::vector<Direction>{Direction::kOut, Direction::kIn}
                 : std::vector<Direction>{Direction::kUndirected};
    for (Direction d : dirs) {
      const auto dist = testing::HopDistances(g, d);
      for (VertexId v = 0; v < g.vertex_count(); ++v) {
        VertexSet previous({v});
        for (unsigned k = 1; k <= 4; ++k) {
          const auto w = khop_window(g, v, k, d);
          ASSERT_EQ(w, testing::OracleKHop(dist, v, k)) << "v=" << v << " k=" << k;
          EXPECT_TRUE(w.contains(v));
          EXPECT_TRUE(previous.subset_of(w));
          previous = w;
        }
      }
    }
  }
}

TEST(TraversalTest, DistancesFollowBfsOrder) {
  const auto g = SocialGraph();
  Traversal t(g);
  const auto members = t.khop_with_distance(V('E'), 2, Direction::kUndirected);
  const auto dist = testing::HopDistances(g, Direction::kUndirected);
  ASSERT_EQ(members.size(), 6u);
  EXPECT_EQ(members[0], V('E'));
  for (std::size_t i = 0; i < members.size(); ++i) {
    EXPECT_EQ(t.distances()[i], dist[V('E')][members[i]]);
  }
}

TEST(TopologicalTest, ChainOrder) {
  EXPECT_EQ(topological_order(testing::Chain(3)), (std::vector<VertexId>{0, 1, 2}));
}

TEST(TopologicalTest, ParentBeforeChild) {
  const auto g = SampleDag();
  const auto order = topological_order(g);
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  EXPECT_LT(pos[V('D')], pos[V('E')]);
  for (const Edge& e : g.edges()) EXPECT_LT(pos[e.source], pos[e.target]);
}

TEST(TopologicalTest, CycleIsReported) {
  const auto g = Graph::from_edges(3, Directedness::kDirected,
                                   std::vector<Edge>{{0, 1}, {1, 0}, {1, 2}});
  try {
    topological_order(g);
    FAIL() << "expected a cycle error";
  } catch (const CycleError& e) {
    EXPECT_TRUE(e.vertex() == 0 || e.vertex() == 1);
  }
  EXPECT_THROW(topological_window(g, 2), CycleError);
  EXPECT_THROW(topological_order(SocialGraph()), UsageError);
}

TEST(TopologicalTest, WindowExamples) {
  const auto g = SampleDag();
  EXPECT_EQ(topological_window(g, V('E')), Set("ABCDE"));
  EXPECT_EQ(topological_window(g, V('H')), Set("ABDH"));
  EXPECT_EQ(topological_window(g, V('A')), Set("A"));
  EXPECT_EQ(descendants_of(g, V('D')), Set("DEGH"));
}

// Property: containment along edges (W(u) is inside W(v) for u -> v) and
// agreement with the closure oracle.
TEST(TopologicalTest, ContainmentAndOracle) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto g = generate_random_dag(80, 3, seed);
    const auto oracle = testing::OracleAncestors(g);
    std::vector<VertexSet> windows;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      windows.push_back(topological_window(g, v));
      ASSERT_EQ(windows.back(), oracle[v]);
    }
    for (const Edge& e : g.edges()) {
      EXPECT_TRUE(windows[e.source].subset_of(windows[e.target]));
    }
  }
}

TEST(WindowSpecTest, CheckRejectsMismatches) {
  EXPECT_THROW(WindowSpec::khop(0, Direction::kUndirected).check(SocialGraph()), UsageError);
  EXPECT_THROW(WindowSpec::topological().check(SocialGraph()), UsageError);
  EXPECT_THROW(WindowSpec::khop(1, Direction::kUndirected).check(SampleDag()), UsageError);
  EXPECT_NO_THROW(WindowSpec::khop(2, Direction::kIn).check(SampleDag()));
  const auto cyclic =
      Graph::from_edges(2, Directedness::kDirected, std::vector<Edge>{{0, 1}, {1, 0}});
  EXPECT_THROW(WindowSpec::topological().check(cyclic), CycleError);
}

}  // namespace
}  // namespace gwin
