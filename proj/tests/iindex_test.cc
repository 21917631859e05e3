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
#include "gwin/dbindex.hpp"
#include "gwin/error.hpp"
#include "gwin/iindex.hpp"
#include "gwin/nonindexed.hpp"
#include "gwin/traversal.hpp"

namespace gwin {
namespace {

using testing::Names;
using testing::Set;
using testing::V;

TEST(IIndexTest, SampleDagEntries) {
  const auto idx = build_iindex(testing::SampleDag());
  EXPECT_EQ(idx.entry(V('E')).pid, V('D'));
  EXPECT_EQ(Names(idx.entry(V('E')).wd), "C");
  EXPECT_EQ(materialize_window(idx, V('E')), Set("ABCDE"));
  EXPECT_EQ(materialize_window(idx, V('H')), Set("ABDH"));
  EXPECT_EQ(idx.entry(V('A')).pid, kNoVertex);
  EXPECT_EQ(idx.window_cardinality(V('E')), 5u);
}

TEST(IIndexTest, SampleDagCount) {
  const auto idx = build_iindex(testing::SampleDag());
  const auto r = evaluate(idx, AttributeTable(8), {AggregateFunction::kCount, ""});
  EXPECT_EQ(r[V('E')], Value(std::int64_t{5}));
  EXPECT_EQ(r[V('H')], Value(std::int64_t{4}));
  EXPECT_EQ(r[V('D')], Value(std::int64_t{3}));
}

TEST(IIndexTest, ChainHasEmptyDifferences) {
  const auto idx = build_iindex(testing::Chain(3));
  EXPECT_EQ(idx.entry(1).pid, 0u);
  EXPECT_TRUE(idx.entry(1).wd.empty());
  EXPECT_EQ(idx.entry(2).pid, 1u);
  EXPECT_TRUE(idx.entry(2).wd.empty());
  EXPECT_EQ(build_iindex(testing::Chain(50)).wd_entry_count(), 0u);
}

TEST(IIndexTest, SourceWindowIsItself) {
  const auto g = testing::SampleDag();
  const auto idx = build_iindex(g);
  for (char s : std::string("ABC")) {
    EXPECT_EQ(materialize_window(idx, V(s)), VertexSet({V(s)}));
  }
  EXPECT_THROW(materialize_window(idx, 99), UsageError);
}

TEST(IIndexTest, TiesPickSmallestParent) {
  // 2 has parents 0 and 1 with equal windows.
  const auto g = Graph::from_edges(3, Directedness::kDirected,
                                   std::vector<Edge>{{1, 2}, {0, 2}});
  const auto idx = build_iindex(g);
  EXPECT_EQ(idx.entry(2).pid, 0u);
  EXPECT_EQ(idx.entry(2).wd, (std::vector<VertexId>{1}));
}

TEST(IIndexTest, RejectsBadInput) {
  EXPECT_THROW(build_iindex(testing::SocialGraph()), UsageError);
  const auto cyclic =
      Graph::from_edges(2, Directedness::kDirected, std::vector<Edge>{{0, 1}, {1, 0}});
  EXPECT_THROW(build_iindex(cyclic), CycleError);
  EXPECT_THROW(IIndex({{1, {}}, {0, {}}}, 0), FormatError);
  EXPECT_THROW(IIndex({{5, {}}}, 0), FormatError);
}

TEST(IIndexTest, MaterializeMatchesAncestorOracle) {
  const auto g = generate_random_dag(2000, 6, 1);
  const auto idx = build_iindex(g);
  Traversal t(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    ASSERT_EQ(materialize_window(idx, v), VertexSet(t.reachable(v, Direction::kIn))) << v;
  }
  // Small instance against the closure oracle, independent of Traversal.
  const auto small = generate_random_dag(120, 4, 2);
  const auto oracle = testing::OracleAncestors(small);
  const auto sidx = build_iindex(small);
  for (VertexId v = 0; v < small.vertex_count(); ++v) {
    ASSERT_EQ(materialize_window(sidx, v), oracle[v]);
  }
}

TEST(IIndexTest, EvaluateMatchesOracle) {
  const auto g = generate_random_dag(2000, 6, 3);
  const auto idx = build_iindex(g);
  const auto attrs = testing::RandomAttributes(2000, 3);
  for (const std::string attr : {"x", "r"}) {
    for (const auto& spec : testing::AllAggregates(attr)) {
      EXPECT_TRUE(compare_results(
                      evaluate_nonindexed(g, attrs, WindowSpec::topological(), spec),
                      evaluate(idx, attrs, spec))
                      .empty())
          << to_string(spec.function) << " " << attr;
    }
  }
  AttributeTable zeros(2000);
  zeros.add_column(AttributeColumn("z", std::vector<std::int64_t>(2000, 0)));
  for (const auto& v : evaluate(idx, zeros, {AggregateFunction::kSum, "z"}).values) {
    EXPECT_EQ(v, Value(std::int64_t{0}));
  }
  EXPECT_THROW(evaluate(idx, attrs, {AggregateFunction::kSum, "missing"}), UsageError);
}

TEST(IIndexTest, ShareMoreThanDBIndex) {
  const auto g = generate_random_dag(1500, 5, 4);
  const auto idx = build_iindex(g);
  const auto db = build_mc(g, WindowSpec::topological(), {});
  EvalStats i_stats, d_stats, n_stats;
  const AttributeTable none(1500);
  const AggregateSpec count{AggregateFunction::kCount, ""};
  evaluate(idx, none, count, {.stats = &i_stats});
  evaluate(db, none, count, {.stats = &d_stats});
  evaluate_nonindexed(g, none, WindowSpec::topological(), count, {.stats = &n_stats});
  EXPECT_LE(i_stats.add_ops, d_stats.add_ops);
  EXPECT_LE(d_stats.add_ops, n_stats.add_ops);
  std::uint64_t with_parent = 0;
  for (const auto& e : idx.entries()) with_parent += e.pid != kNoVertex;
  EXPECT_EQ(i_stats.add_ops, idx.wd_entry_count() + with_parent);
}

TEST(IIndexUpdateTest, DeletingParentEdgeSwitchesParent) {
  // t = E has parents D (pid, larger window) and C; dropping D -> E leaves C.
  auto g = testing::SampleDag();
  auto idx = build_iindex(g);
  IIndexUpdateStats stats;
  g = apply_edge_update(idx, g, {V('D'), V('E')}, false, &stats);
  EXPECT_TRUE(stats.parent_removed);
  EXPECT_EQ(idx.entry(V('E')).pid, V('C'));
  EXPECT_TRUE(idx.entry(V('E')).wd.empty());
  EXPECT_EQ(idx, build_iindex(g));
  EXPECT_EQ(idx.graph_fingerprint(), g.fingerprint());
}

TEST(IIndexUpdateTest, InsertIntoTwoVertexGraph) {
  auto g = Graph::from_edges(2, Directedness::kDirected, std::vector<Edge>{});
  auto idx = build_iindex(g);
  g = apply_edge_update(idx, g, {0, 1}, true);
  EXPECT_EQ(idx.entry(1).pid, 0u);
  EXPECT_TRUE(idx.entry(1).wd.empty());
}

TEST(IIndexUpdateTest, RejectsIllegalUpdates) {
  const auto g = testing::SampleDag();
  auto idx = build_iindex(g);
  EXPECT_THROW(apply_edge_update(idx, g, {V('G'), V('A')}, true), CycleError);
  EXPECT_THROW(apply_edge_update(idx, g, {V('A'), V('D')}, true), UsageError);
  EXPECT_THROW(apply_edge_update(idx, g, {V('A'), V('B')}, false), UsageError);
  EXPECT_THROW(apply_edge_update(idx, g, {V('A'), V('A')}, true), UsageError);
  EXPECT_EQ(idx, build_iindex(g));
}

TEST(IIndexUpdateTest, UnrelatedDescendantsAreSkipped) {
  // Adding A -> C changes C, E, F, G; the new edge adds nothing to G via F
  // that E did not already bring, but F and G still get rechecked.
  auto g = testing::SampleDag();
  auto idx = build_iindex(g);
  IIndexUpdateStats stats;
  g = apply_edge_update(idx, g, {V('A'), V('C')}, true, &stats);
  EXPECT_EQ(stats.affected, 4u);
  EXPECT_EQ(stats.recomputed + stats.skipped, stats.affected);
  EXPECT_EQ(idx, build_iindex(g));

  // An edge whose source is already an ancestor changes no window below t.
  IIndexUpdateStats redundant;
  g = apply_edge_update(idx, g, {V('A'), V('G')}, true, &redundant);
  EXPECT_EQ(redundant.recomputed, 1u);
  EXPECT_EQ(idx, build_iindex(g));
}

// Property: a random mixed insert/delete replay keeps the index identical to
// a fresh build and every window equal to the ancestor oracle.
TEST(IIndexUpdateTest, MixedReplayMatchesRebuild) {
  auto g = generate_random_dag(300, 3, 7);
  auto idx = build_iindex(g);
  Rng rng(77);
  int steps = 0;
  while (steps < 50) {
    const bool insert = rng.below(3) != 0 || g.edge_count() == 0;
    Edge e;
    if (insert) {
      e = {static_cast<VertexId>(rng.below(300)), static_cast<VertexId>(rng.below(300))};
      if (e.source == e.target || g.has_edge(e.source, e.target)) continue;
    } else {
      const auto edges = g.edges();
      e = edges[rng.below(edges.size())];
    }
    try {
      g = apply_edge_update(idx, g, e, insert);
    } catch (const CycleError&) {
      continue;
    }
    ++steps;
    ASSERT_EQ(idx, build_iindex(g)) << "step " << steps;
  }
  const auto oracle = testing::OracleAncestors(g);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    EXPECT_EQ(materialize_window(idx, v), oracle[v]);
  }
}

TEST(IIndexSizeTest, ChainCarriesOnlyParents) {
  const auto g = testing::Chain(1000);
  const auto r = index_size_report(build_iindex(g), g);
  EXPECT_EQ(r.wd_entries, 0u);
  EXPECT_GT(r.ratio, 0.0);
  EXPECT_LT(r.ratio, 1.5);
}

TEST(IIndexSizeTest, SampleDag) {
  const auto g = testing::SampleDag();
  const auto idx = build_iindex(g);
  EXPECT_EQ(idx.entry(V('E')).wd.size(), 1u);
  const auto r = index_size_report(idx, g);
  EXPECT_EQ(r.wd_entries, idx.wd_entry_count());
}

}  // namespace
}  // namespace gwin
