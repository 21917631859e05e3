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

#include "gwin/index_io.hpp"

#include <json.hpp>

#include "gwin/codec.hpp"

namespace gwin {
namespace {

constexpr std::string_view kDBIndexMagic = "GWDB1";
constexpr std::string_view kIIndexMagic = "GWII1";
constexpr std::string_view kGraphMagic = "GWGR1";

void put_window(ByteWriter& w, const WindowSpec& spec) {
  w.put_u8(static_cast<std::uint8_t>(spec.kind));
  w.put_varint(spec.k);
  w.put_u8(static_cast<std::uint8_t>(spec.direction));
}

WindowSpec get_window(ByteReader& r) {
  WindowSpec spec;
  const auto kind = r.get_u8();
  if (kind > static_cast<std::uint8_t>(WindowKind::kTopological)) {
    throw FormatError("unknown window kind");
  }
  spec.kind = static_cast<WindowKind>(kind);
  spec.k = static_cast<unsigned>(r.get_bounded(0xffffffffu, "k"));
  const auto dir = r.get_u8();
  if (dir > static_cast<std::uint8_t>(Direction::kUndirected)) {
    throw FormatError("unknown direction");
  }
  spec.direction = static_cast<Direction>(dir);
  return spec;
}

nlohmann::json window_json(const WindowSpec& spec) {
  nlohmann::json j{{"kind", to_string(spec.kind)}};
  if (spec.kind == WindowKind::kKHop) {
    j["k"] = spec.k;
    j["direction"] = to_string(spec.direction);
  }
  return j;
}

}  // namespace

std::string serialize(const DBIndex& index) {
  ByteWriter w;
  w.put_bytes(kDBIndexMagic);
  w.put_u64(index.graph_fingerprint());
  put_window(w, index.window_spec());
  const BuildParams& p = index.params();
  w.put_u8(static_cast<std::uint8_t>(p.strategy));
  w.put_varint(p.signature_size);
  w.put_u64(p.seed);
  w.put_varint(p.max_cluster);
  w.put_varint(p.max_rounds);
  w.put_varint(p.cluster_hops);
  w.put_varint(p.cluster_signature_size);
  w.put_varint(index.update_log().updates);
  w.put_varint(index.update_log().staleness_threshold);

  w.put_varint(index.vertex_count());
  w.put_varint(index.block_count());
  for (BlockId b = 0; b < index.block_count(); ++b) {
    const auto members = index.block(b);
    w.put_varint(members.size());
    for (VertexId x : members) w.put_varint(x);
  }
  for (VertexId v = 0; v < index.vertex_count(); ++v) {
    const auto links = index.links(v);
    w.put_varint(links.size());
    for (BlockId b : links) w.put_varint(b);
  }
  return w.take();
}

DBIndex deserialize_dbindex(std::string_view bytes) {
  ByteReader r(bytes);
  r.expect(kDBIndexMagic);
  const std::uint64_t fingerprint = r.get_u64();
  const WindowSpec window = get_window(r);
  BuildParams p;
  const auto strategy = r.get_u8();
  if (strategy > static_cast<std::uint8_t>(BuildStrategy::kEMC)) {
    throw FormatError("unknown build strategy");
  }
  p.strategy = static_cast<BuildStrategy>(strategy);
  p.signature_size = static_cast<std::uint32_t>(r.get_bounded(1u << 20, "signature size"));
  p.seed = r.get_u64();
  p.max_cluster = static_cast<std::uint32_t>(r.get_bounded(0xffffffffu, "max cluster"));
  p.max_rounds = static_cast<std::uint32_t>(r.get_bounded(0xffffffffu, "max rounds"));
  p.cluster_hops = static_cast<std::uint32_t>(r.get_bounded(0xffffffffu, "cluster hops"));
  p.cluster_signature_size =
      static_cast<std::uint32_t>(r.get_bounded(1u << 20, "cluster signature size"));
  UpdateLog log;
  log.updates = r.get_varint();
  log.staleness_threshold = r.get_varint();

  // Every ID takes at least one byte, which bounds all counts below.
  const std::uint64_t n = r.get_bounded(r.remaining(), "vertex count");
  const std::uint64_t blocks = r.get_bounded(r.remaining(), "block count");
  if (blocks > 0 && n == 0) throw FormatError("blocks in an empty index");
  DBIndex index(n, window, p, fingerprint);
  index.update_log() = log;
  std::vector<VertexId> members;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t size = r.get_bounded(r.remaining(), "block size");
    if (size == 0) throw FormatError("empty block");
    members.clear();
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto x = static_cast<VertexId>(r.get_bounded(n - 1, "block member"));
      if (!members.empty() && x <= members.back()) {
        throw FormatError("block members not strictly increasing");
      }
      members.push_back(x);
    }
    if (index.add_block(members) != b) throw FormatError("duplicate block");
  }
  std::vector<std::pair<VertexId, BlockId>> links;
  for (VertexId v = 0; v < n; ++v) {
    const std::uint64_t count = r.get_bounded(r.remaining(), "link count");
    for (std::uint64_t i = 0; i < count; ++i) {
      if (blocks == 0) throw FormatError("link to a missing block");
      links.emplace_back(v, static_cast<BlockId>(r.get_bounded(blocks - 1, "block id")));
    }
  }
  index.add_links(links);
  if (!r.done()) throw FormatError("trailing bytes after index");
  return index;
}

std::string serialize(const IIndex& index) {
  ByteWriter w;
  w.put_bytes(kIIndexMagic);
  w.put_u64(index.graph_fingerprint());
  w.put_varint(index.vertex_count());
  for (const auto& e : index.entries()) {
    // pid + 1 so that 0 encodes "no parent".
    w.put_varint(e.pid == kNoVertex ? 0 : std::uint64_t{e.pid} + 1);
    w.put_varint(e.wd.size());
    for (VertexId x : e.wd) w.put_varint(x);
  }
  return w.take();
}

IIndex deserialize_iindex(std::string_view bytes) {
  ByteReader r(bytes);
  r.expect(kIIndexMagic);
  const std::uint64_t fingerprint = r.get_u64();
  const std::uint64_t n = r.get_bounded(r.remaining(), "vertex count");
  std::vector<IIndexEntry> entries(n);
  for (auto& e : entries) {
    const std::uint64_t pid = r.get_bounded(n, "pid");
    e.pid = pid == 0 ? kNoVertex : static_cast<VertexId>(pid - 1);
    const std::uint64_t size = r.get_bounded(r.remaining(), "wd size");
    e.wd.reserve(size);
    for (std::uint64_t i = 0; i < size; ++i) {
      const auto x = static_cast<VertexId>(r.get_bounded(n - 1, "wd member"));
      if (!e.wd.empty() && x <= e.wd.back()) {
        throw FormatError("wd members not strictly increasing");
      }
      e.wd.push_back(x);
    }
    if (e.pid == kNoVertex && !e.wd.empty()) {
      throw FormatError("vertex without parent has a non-empty wd");
    }
  }
  if (!r.done()) throw FormatError("trailing bytes after index");
  return IIndex(std::move(entries), fingerprint);
}

IndexFormat detect_index_format(std::string_view bytes) {
  if (bytes.starts_with(kDBIndexMagic)) return IndexFormat::kDBIndex;
  if (bytes.starts_with(kIIndexMagic)) return IndexFormat::kIIndex;
  throw FormatError("not an index file");
}

std::string serialize_graph(const Graph& g) {
  ByteWriter w;
  w.put_bytes(kGraphMagic);
  w.put_u8(g.directed() ? 1 : 0);
  w.put_varint(g.vertex_count());
  const auto edges = g.edges();
  w.put_varint(edges.size());
  for (const Edge& e : edges) {
    w.put_varint(e.source);
    w.put_varint(e.target);
  }
  return w.take();
}

std::string to_json(const DBIndex& index) {
  const BuildParams& p = index.params();
  nlohmann::json j{
      {"format", kDBIndexMagic},
      {"graph_fingerprint", index.graph_fingerprint()},
      {"window", window_json(index.window_spec())},
      {"params",
       {{"strategy", to_string(p.strategy)},
        {"signature_size", p.signature_size},
        {"seed", p.seed},
        {"max_cluster", p.max_cluster},
        {"max_rounds", p.max_rounds},
        {"cluster_hops", p.cluster_hops},
        {"cluster_signature_size", p.cluster_signature_size}}},
      {"update_log",
       {{"updates", index.update_log().updates},
        {"staleness_threshold", index.update_log().staleness_threshold}}},
  };
  auto& blocks = j["blocks"] = nlohmann::json::array();
  for (BlockId b = 0; b < index.block_count(); ++b) {
    const auto members = index.block(b);
    blocks.push_back(std::vector<VertexId>(members.begin(), members.end()));
  }
  auto& links = j["links"] = nlohmann::json::array();
  for (VertexId v = 0; v < index.vertex_count(); ++v) {
    const auto l = index.links(v);
    links.push_back(std::vector<BlockId>(l.begin(), l.end()));
  }
  return j.dump(2);
}

std::string to_json(const IIndex& index) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : index.entries()) {
    entries.push_back({{"pid", e.pid == kNoVertex ? nlohmann::json() : nlohmann::json(e.pid)},
                       {"wd", e.wd}});
  }
  nlohmann::json j{{"format", kIIndexMagic},
                   {"graph_fingerprint", index.graph_fingerprint()},
                   {"entries", std::move(entries)}};
  return j.dump(2);
}

}  // namespace gwin
