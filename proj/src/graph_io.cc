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

#include "gwin/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "gwin/error.hpp"

namespace gwin {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_space(s.front()) || s.front() == '\n')) s.remove_prefix(1);
  while (!s.empty() && (is_space(s.back()) || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

// Splits on runs of blanks.
std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_u64(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_i64(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_f64(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(trim(line.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

LoadedGraph load_edge_list(std::istream& in, Directedness directedness) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  std::size_t self_loops = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    auto tok = tokens(view);
    if (tok.size() != 2) {
      throw ParseError(line_no, "expected two vertex labels, got " +
                                    std::to_string(tok.size()) + " tokens");
    }
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (!parse_u64(tok[0], u) || !parse_u64(tok[1], v)) {
      throw ParseError(line_no, "non-integer vertex label in '" +
                                    std::string(view) + "'");
    }
    if (u == v) {
      ++self_loops;
      // The vertex still exists even though the loop is dropped.
      raw.emplace_back(u, u);
      continue;
    }
    raw.emplace_back(u, v);
  }
  if (raw.empty()) throw DataError("edge list is empty");

  std::vector<std::uint64_t> labels;
  labels.reserve(raw.size() * 2);
  for (const auto& [u, v] : raw) {
    labels.push_back(u);
    labels.push_back(v);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() >= kNoVertex) throw DataError("too many vertices");

  auto dense = [&](std::uint64_t label) {
    return static_cast<VertexId>(
        std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [u, v] : raw) {
    if (u == v) continue;
    VertexId a = dense(u);
    VertexId b = dense(v);
    if (directedness == Directedness::kUndirected && a > b) std::swap(a, b);
    edges.push_back({a, b});
  }
  std::sort(edges.begin(), edges.end());
  const std::size_t before = edges.size();
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  LoadedGraph out;
  out.duplicate_edges = before - edges.size();
  out.self_loops = self_loops;
  const std::size_t n = labels.size();
  out.graph = Graph::from_edges(n, directedness, edges, std::move(labels));
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# gwin " << (g.directed() ? "directed" : "undirected") << " "
      << g.vertex_count() << " vertices " << g.edge_count() << " edges\n";
  for (const Edge& e : g.edges()) {
    out << g.label(e.source) << ' ' << g.label(e.target) << '\n';
  }
  // Isolated vertices as self-loop lines, which the reader turns back into
  // edgeless vertices.
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (g.out_neighbors(v).empty() && g.in_neighbors(v).empty()) {
      out << g.label(v) << ' ' << g.label(v) << '\n';
    }
  }
}

LoadedAttributes load_attributes(std::istream& in, const Graph& g) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> names;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_csv(trim(line));
    if (cells.empty() || cells[0] != "vertex") {
      throw ParseError(line_no, "attribute header must start with 'vertex'");
    }
    for (std::size_t i = 1; i < cells.size(); ++i) {
      if (cells[i].empty()) throw ParseError(line_no, "empty attribute name");
      names.emplace_back(cells[i]);
    }
    header_seen = true;
    break;
  }
  if (!header_seen) throw DataError("attribute file is empty");

  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::string>> cells_by_column(names.size(),
                                                        std::vector<std::string>(n));
  std::size_t unknown = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    auto cells = split_csv(view);
    if (cells.size() != names.size() + 1) {
      throw ParseError(line_no, "expected " + std::to_string(names.size() + 1) +
                                    " fields, got " + std::to_string(cells.size()));
    }
    std::uint64_t label = 0;
    if (!parse_u64(cells[0], label)) {
      throw ParseError(line_no, "non-integer vertex label");
    }
    auto v = g.find_label(label);
    if (!v) {
      ++unknown;
      continue;
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
      cells_by_column[c][*v] = std::string(cells[c + 1]);
    }
  }

  LoadedAttributes out{AttributeTable(n), unknown};
  for (std::size_t c = 0; c < names.size(); ++c) {
    auto& col = cells_by_column[c];
    bool integral = std::all_of(col.begin(), col.end(), [](const std::string& s) {
      std::int64_t x;
      return s.empty() || parse_i64(s, x);
    });
    if (integral) {
      std::vector<std::int64_t> values(n, 0);
      for (std::size_t v = 0; v < n; ++v) {
        if (!col[v].empty()) parse_i64(col[v], values[v]);
      }
      out.table.add_column(AttributeColumn(names[c], std::move(values)));
    } else {
      std::vector<double> values(n, 0.0);
      for (std::size_t v = 0; v < n; ++v) {
        if (!col[v].empty() && !parse_f64(col[v], values[v])) {
          throw DataError("attribute '" + names[c] + "' has a non-numeric value '" +
                          col[v] + "'");
        }
      }
      out.table.add_column(AttributeColumn(names[c], std::move(values)));
    }
  }
  return out;
}

void write_attributes(std::ostream& out, const AttributeTable& table,
                      const Graph& g) {
  out << "vertex";
  for (const auto& c : table.columns()) out << ',' << c.name();
  out << '\n';
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << g.label(v);
    for (const auto& c : table.columns()) {
      out << ',';
      if (c.kind() == NumericKind::kInteger) {
        out << c.integers()[v];
      } else {
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), c.reals()[v]);
        out.write(buf, ptr - buf);
      }
    }
    out << '\n';
  }
}

}  // namespace gwin
