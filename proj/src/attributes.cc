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

#include "gwin/attributes.hpp"

#include <algorithm>

#include "gwin/error.hpp"

namespace gwin {

void AttributeTable::add_column(AttributeColumn column) {
  if (has(column.name())) {
    throw UsageError("duplicate attribute '" + column.name() + "'");
  }
  if (column.size() != vertex_count_) {
    throw UsageError("attribute '" + column.name() + "' has " +
                     std::to_string(column.size()) + " values, expected " +
                     std::to_string(vertex_count_));
  }
  columns_.push_back(std::move(column));
}

bool AttributeTable::has(const std::string& name) const {
  return std::any_of(columns_.begin(), columns_.end(),
                     [&](const AttributeColumn& c) { return c.name() == name; });
}

const AttributeColumn& AttributeTable::column(const std::string& name) const {
  for (const auto& c : columns_) {
    if (c.name() == name) return c;
  }
  throw UsageError("unknown attribute '" + name + "'");
}

}  // namespace gwin
