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

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace gwin {

enum class NumericKind : std::uint8_t { kInteger, kReal };

// One numeric value per vertex. Integer columns aggregate exactly in 64-bit
// arithmetic; real columns use double.
class AttributeColumn {
 public:
  AttributeColumn(std::string name, std::vector<std::int64_t> values)
      : name_(std::move(name)), values_(std::move(values)) {}
  AttributeColumn(std::string name, std::vector<double> values)
      : name_(std::move(name)), values_(std::move(values)) {}

  const std::string& name() const { return name_; }
  NumericKind kind() const {
    return std::holds_alternative<std::vector<std::int64_t>>(values_)
               ? NumericKind::kInteger
               : NumericKind::kReal;
  }
  std::size_t size() const {
    return std::visit([](const auto& v) { return v.size(); }, values_);
  }

  std::span<const std::int64_t> integers() const {
    return std::get<std::vector<std::int64_t>>(values_);
  }
  std::span<const double> reals() const {
    return std::get<std::vector<double>>(values_);
  }

 private:
  std::string name_;
  std::variant<std::vector<std::int64_t>, std::vector<double>> values_;
};

class AttributeTable {
 public:
  explicit AttributeTable(std::size_t vertex_count = 0)
      : vertex_count_(vertex_count) {}

  std::size_t vertex_count() const { return vertex_count_; }

  // Throws UsageError on a duplicate name or a column of the wrong length.
  void add_column(AttributeColumn column);

  bool has(const std::string& name) const;
  // Throws UsageError when the attribute does not exist.
  const AttributeColumn& column(const std::string& name) const;
  const std::vector<AttributeColumn>& columns() const { return columns_; }

 private:
  std::size_t vertex_count_;
  std::vector<AttributeColumn> columns_;
};

}  // namespace gwin
