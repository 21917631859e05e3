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

#include <string>
#include <string_view>

#include "gwin/dbindex.hpp"
#include "gwin/graph.hpp"
#include "gwin/iindex.hpp"

namespace gwin {

enum class IndexFormat { kDBIndex, kIIndex };

// Binary containers: "GWDB1" / "GWII1" magic, graph fingerprint, then the
// index body with varint-coded IDs.
std::string serialize(const DBIndex& index);
std::string serialize(const IIndex& index);

// Throw FormatError on a bad magic, truncation, or inconsistent content.
DBIndex deserialize_dbindex(std::string_view bytes);
IIndex deserialize_iindex(std::string_view bytes);

// Throws FormatError unless the bytes start with a known magic.
IndexFormat detect_index_format(std::string_view bytes);

// Varint edge list ("GWGR1", directedness, n, m, edges); the reference size
// for index ratios.
std::string serialize_graph(const Graph& g);

// Pretty-printed JSON debug dumps mirroring the binary content.
std::string to_json(const DBIndex& index);
std::string to_json(const IIndex& index);

}  // namespace gwin
