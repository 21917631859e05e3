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

#include <json.hpp>
#include <sstream>

#include "fixtures.hpp"
#include "gwin/codec.hpp"
#include "gwin/dbindex.hpp"
#include "gwin/error.hpp"
#include "gwin/graph_io.hpp"
#include "gwin/iindex.hpp"
#include "gwin/index_io.hpp"
#include "gwin/result_io.hpp"

namespace gwin {
namespace {

TEST(CodecTest, VarintRoundTrip) {
  ByteWriter w;
  const std::vector<std::uint64_t> xs = {0, 1, 127, 128, 300, 1ull << 35, ~0ull};
  for (auto x : xs) w.put_varint(x);
  w.put_u64(0x0123456789abcdefULL);
  ByteReader r(w.bytes());
  for (auto x : xs) EXPECT_EQ(r.get_varint(), x);
  EXPECT_EQ(r.get_u64(), 0x0123456789abcdefULL);
  EXPECT_TRUE(r.done());
  EXPECT_THROW(r.get_u8(), FormatError);
}

TEST(CodecTest, RejectsOverlongVarint) {
  const std::string bad(11, '\xff');
  ByteReader r(bad);
  EXPECT_THROW(r.get_varint(), FormatError);
  ByteReader small("\x05");
  EXPECT_THROW(small.get_bounded(4, "count"), FormatError);
}

TEST(IndexIoTest, DBIndexRoundTrip) {
  const auto g = generate_random_graph(500, 6, 2);
  BuildParams p;
  p.strategy = BuildStrategy::kEMC;
  p.seed = 99;
  p.max_cluster = 77;
  p.cluster_signature_size = 2;
  auto idx = build_emc(g, WindowSpec::khop(2, Direction::kUndirected), p);
  idx.update_log().staleness_threshold = 12;
  const auto bytes = serialize(idx);
  EXPECT_EQ(detect_index_format(bytes), IndexFormat::kDBIndex);
  const auto back = deserialize_dbindex(bytes);
  EXPECT_EQ(back, idx);
  EXPECT_EQ(back.params().seed, 99u);
  EXPECT_EQ(back.params().max_cluster, 77u);
  EXPECT_EQ(back.params().strategy, BuildStrategy::kEMC);
  EXPECT_EQ(back.params().cluster_signature_size, 2u);
  EXPECT_EQ(back.update_log().staleness_threshold, 12u);
  EXPECT_EQ(serialize(back), bytes);
}

TEST(IndexIoTest, IIndexRoundTrip) {
  const auto g = generate_random_dag(500, 4, 2);
  const auto idx = build_iindex(g);
  const auto bytes = serialize(idx);
  EXPECT_EQ(detect_index_format(bytes), IndexFormat::kIIndex);
  EXPECT_EQ(deserialize_iindex(bytes), idx);
}

TEST(IndexIoTest, FormatErrors) {
  const auto g = testing::SocialGraph();
  const auto bytes = serialize(build_mc(g, WindowSpec::khop(1, Direction::kUndirected), {}));
  EXPECT_THROW(deserialize_dbindex(bytes.substr(0, bytes.size() - 1)), FormatError);
  EXPECT_THROW(deserialize_dbindex(bytes + "x"), FormatError);
  EXPECT_THROW(deserialize_dbindex("GWII1" + bytes.substr(5)), FormatError);
  EXPECT_THROW(deserialize_iindex(bytes), FormatError);
  EXPECT_THROW(detect_index_format("nonsense"), FormatError);
  EXPECT_THROW(detect_index_format(""), FormatError);

  // Every truncation must fail cleanly, never crash or succeed.
  for (std::size_t len = 0; len < bytes.size(); ++len) {
    EXPECT_THROW(deserialize_dbindex(bytes.substr(0, len)), FormatError) << len;
  }
  const auto ibytes = serialize(build_iindex(testing::SampleDag()));
  for (std::size_t len = 0; len < ibytes.size(); ++len) {
    EXPECT_THROW(deserialize_iindex(ibytes.substr(0, len)), FormatError) << len;
  }
}

TEST(IndexIoTest, GraphBytesAndJson) {
  const auto g = testing::SocialGraph();
  const auto gb = serialize_graph(g);
  EXPECT_EQ(gb.substr(0, 5), "GWGR1");
  const auto idx = build_mc(g, WindowSpec::khop(1, Direction::kUndirected), {});
  const auto j = nlohmann::json::parse(to_json(idx));
  EXPECT_EQ(j["blocks"].size(), idx.block_count());
  const auto ij = nlohmann::json::parse(to_json(build_iindex(testing::SampleDag())));
  EXPECT_FALSE(ij.empty());
}

TEST(AttributeIoTest, LoadsTypedColumns) {
  const auto g = testing::SocialGraph();
  std::istringstream in("vertex,posts,score\n0,5,1.5\n1,-2,2\n3,7,x\n99,1,1\n");
  EXPECT_THROW(load_attributes(in, g), DataError);

  std::istringstream ok("vertex,posts,score\n0,5,1.5\n1,-2,2\n\n99,1,1\n");
  const auto loaded = load_attributes(ok, g);
  EXPECT_EQ(loaded.unknown_rows, 1u);
  const auto& posts = loaded.table.column("posts");
  ASSERT_EQ(posts.kind(), NumericKind::kInteger);
  EXPECT_EQ(posts.integers()[0], 5);
  EXPECT_EQ(posts.integers()[1], -2);
  EXPECT_EQ(posts.integers()[2], 0);
  EXPECT_EQ(loaded.table.column("score").kind(), NumericKind::kReal);

  std::ostringstream out;
  write_attributes(out, loaded.table, g);
  std::istringstream again(out.str());
  const auto back = load_attributes(again, g);
  EXPECT_EQ(back.table.column("score").reals()[0], 1.5);
  EXPECT_EQ(back.table.column("posts").integers()[1], -2);
}

TEST(AttributeIoTest, Errors) {
  const auto g = testing::SocialGraph();
  std::istringstream empty("");
  EXPECT_THROW(load_attributes(empty, g), DataError);
  std::istringstream header("id,x\n0,1\n");
  EXPECT_THROW(load_attributes(header, g), ParseError);
  std::istringstream width("vertex,x\n0,1,2\n");
  EXPECT_THROW(load_attributes(width, g), ParseError);
  AttributeTable t(3);
  EXPECT_THROW(t.add_column(AttributeColumn("x", std::vector<std::int64_t>(2))), UsageError);
  t.add_column(AttributeColumn("x", std::vector<std::int64_t>(3)));
  EXPECT_THROW(t.add_column(AttributeColumn("x", std::vector<std::int64_t>(3))), UsageError);
}

TEST(ResultIoTest, CsvAndJson) {
  const auto g = Graph::from_edges(3, Directedness::kUndirected, std::vector<Edge>{{0, 1}},
                                   {4, 8, 15});
  ResultTable r;
  r.values = {Value(std::int64_t{3}), Value(2.5), Value(std::monostate{})};
  std::ostringstream csv;
  write_results_csv(csv, g, r);
  EXPECT_EQ(csv.str(), "vertex,value\n4,3\n8,2.5\n15,\n");
  std::ostringstream js;
  write_results_json(js, g, r);
  const auto j = nlohmann::json::parse(js.str());
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["vertex"], 4);
  EXPECT_EQ(j[1]["value"], 2.5);
  EXPECT_TRUE(j[2]["value"].is_null());
}

}  // namespace
}  // namespace gwin
