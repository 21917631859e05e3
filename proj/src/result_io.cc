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

#include "gwin/result_io.hpp"

#include <json.hpp>

namespace gwin {

// Dense IDs are assigned in ascending label order, so ID order is label order.
void write_results_csv(std::ostream& out, const Graph& g, const ResultTable& results) {
  if (results.size() != g.vertex_count()) {
    throw UsageError("result table does not match the graph");
  }
  out << "vertex,value\n";
  for (VertexId v = 0; v < results.size(); ++v) {
    out << g.label(v) << ',' << format_value(results[v]) << '\n';
  }
}

void write_results_json(std::ostream& out, const Graph& g, const ResultTable& results) {
  if (results.size() != g.vertex_count()) {
    throw UsageError("result table does not match the graph");
  }
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (VertexId v = 0; v < results.size(); ++v) {
    nlohmann::ordered_json value;
    if (const auto* i = std::get_if<std::int64_t>(&results[v])) {
      value = *i;
    } else if (const auto* d = std::get_if<double>(&results[v])) {
      value = *d;
    }
    rows.push_back({{"vertex", g.label(v)}, {"value", value}});
  }
  out << rows.dump() << '\n';
}

}  // namespace gwin
