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
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gwin/attributes.hpp"
#include "gwin/error.hpp"
#include "gwin/graph.hpp"

namespace gwin {

// Distributive (sum, count, min, max) and algebraic (avg) aggregates. min and
// max are extensions beyond sum/count/avg; they are distributive so the same
// two-phase machinery applies.
enum class AggregateFunction : std::uint8_t { kSum, kCount, kAvg, kMin, kMax };

struct AggregateSpec {
  AggregateFunction function = AggregateFunction::kSum;
  // Ignored for count.
  std::string attribute;
};

const char* to_string(AggregateFunction f);
// Throws UsageError for an unknown name.
AggregateFunction parse_aggregate_function(const std::string& name);

// Finalized aggregate. std::monostate is the NULL marker (avg/min/max over an
// empty window); integer columns finalize sum/count/min/max to int64_t and
// avg to double.
using Value = std::variant<std::monostate, std::int64_t, double>;
using Number = std::variant<std::int64_t, double>;

// Hot-loop kernels. Each kernel has a compact State, an identity, add (fold
// one attribute value), merge (combine two partials) and finalize. Evaluators
// are templated on these so the per-element path has no dispatch.
namespace kernel {

template <class T>
struct Sum {
  using value_type = T;
  using State = T;
  static constexpr bool kReadsValues = true;
  static State identity() { return T{0}; }
  static void add(State& s, T x) { s += x; }
  static void merge(State& a, const State& b) { a += b; }
  static Value finalize(const State& s) { return s; }
};

template <class T>
struct Count {
  using value_type = T;
  using State = std::int64_t;
  static constexpr bool kReadsValues = false;
  static State identity() { return 0; }
  static void add(State& s, T) { ++s; }
  static void merge(State& a, const State& b) { a += b; }
  static Value finalize(const State& s) { return s; }
};

template <class T>
struct AvgState {
  T total{0};
  std::int64_t count = 0;
  friend bool operator==(const AvgState&, const AvgState&) = default;
};

template <class T>
struct Avg {
  using value_type = T;
  using State = AvgState<T>;
  static constexpr bool kReadsValues = true;
  static State identity() { return {}; }
  static void add(State& s, T x) {
    s.total += x;
    ++s.count;
  }
  static void merge(State& a, const State& b) {
    a.total += b.total;
    a.count += b.count;
  }
  static Value finalize(const State& s) {
    if (s.count == 0) return std::monostate{};
    return static_cast<double>(s.total) / static_cast<double>(s.count);
  }
};

template <class T>
struct ExtremumState {
  T value{0};
  bool present = false;
  friend bool operator==(const ExtremumState&, const ExtremumState&) = default;
};

template <class T, bool kMin>
struct Extremum {
  using value_type = T;
  using State = ExtremumState<T>;
  static constexpr bool kReadsValues = true;
  static State identity() { return {}; }
  static void add(State& s, T x) {
    if (!s.present || (kMin ? x < s.value : x > s.value)) s.value = x;
    s.present = true;
  }
  static void merge(State& a, const State& b) {
    if (b.present) add(a, b.value);
  }
  static Value finalize(const State& s) {
    if (!s.present) return std::monostate{};
    return s.value;
  }
};

template <class T>
using Min = Extremum<T, true>;
template <class T>
using Max = Extremum<T, false>;

template <class K>
inline void add_vertex(typename K::State& s,
                       std::span<const typename K::value_type> column,
                       VertexId v) {
  if constexpr (K::kReadsValues) {
    K::add(s, column[v]);
  } else {
    K::add(s, typename K::value_type{});
  }
}

}  // namespace kernel

// Resolves the attribute column named by `spec` and calls
// f(Kernel{}, std::span<const T> column). For count the column is empty and
// never read. Throws UsageError for an unknown attribute.
template <class F>
void dispatch_aggregate(const AggregateSpec& spec, const AttributeTable& attrs,
                        F&& f) {
  using kernel::Avg;
  using kernel::Count;
  using kernel::Max;
  using kernel::Min;
  using kernel::Sum;
  if (spec.function == AggregateFunction::kCount) {
    f(Count<std::int64_t>{}, std::span<const std::int64_t>{});
    return;
  }
  const AttributeColumn& col = attrs.column(spec.attribute);
  auto run = [&](auto values) {
    using T = typename decltype(values)::value_type;
    switch (spec.function) {
      case AggregateFunction::kSum:
        f(Sum<T>{}, values);
        break;
      case AggregateFunction::kAvg:
        f(Avg<T>{}, values);
        break;
      case AggregateFunction::kMin:
        f(Min<T>{}, values);
        break;
      case AggregateFunction::kMax:
        f(Max<T>{}, values);
        break;
      case AggregateFunction::kCount:
        break;
    }
  };
  if (col.kind() == NumericKind::kInteger) {
    run(col.integers());
  } else {
    run(col.reals());
  }
}

// Type-erased combinable aggregation state, the unit the public algebra
// (init_partial / accumulate / combine / finalize) works on.
class PartialAggregate {
 public:
  using State = std::variant<std::int64_t, double, kernel::AvgState<std::int64_t>,
                             kernel::AvgState<double>,
                             kernel::ExtremumState<std::int64_t>,
                             kernel::ExtremumState<double>>;

  PartialAggregate(AggregateFunction function, NumericKind kind);

  AggregateFunction function() const { return function_; }
  NumericKind kind() const { return kind_; }
  const State& state() const { return state_; }

  // Number of values folded in (directly or through combine).
  std::int64_t folded() const { return folded_; }

  friend bool operator==(const PartialAggregate&, const PartialAggregate&) = default;

 private:
  friend PartialAggregate accumulate(PartialAggregate p, Number value);
  friend PartialAggregate combine(const PartialAggregate& a,
                                  const PartialAggregate& b);

  AggregateFunction function_;
  NumericKind kind_;
  State state_;
  std::int64_t folded_ = 0;
};

// Identity element of the function over the given value domain.
PartialAggregate init_partial(AggregateFunction function,
                              NumericKind kind = NumericKind::kInteger);
PartialAggregate init_partial(const AggregateSpec& spec, const AttributeTable& attrs);

// Folds one value in. An integer value is widened for a real partial; a real
// value into an integer partial throws UsageError.
PartialAggregate accumulate(PartialAggregate p, Number value);

// Associative, commutative merge. Throws UsageError when the function or
// value domain differs.
PartialAggregate combine(const PartialAggregate& a, const PartialAggregate& b);

Value finalize(const PartialAggregate& p);

// One finalized value per vertex, indexed by dense vertex ID.
struct ResultTable {
  std::vector<Value> values;

  std::size_t size() const { return values.size(); }
  const Value& operator[](VertexId v) const { return values[v]; }
};

struct ResultMismatch {
  VertexId vertex;
  Value expected;
  Value actual;
};

// Integers and NULLs must match exactly; doubles within `relative_tolerance`.
bool values_match(const Value& expected, const Value& actual,
                  double relative_tolerance = 1e-9);

std::vector<ResultMismatch> compare_results(const ResultTable& expected,
                                            const ResultTable& actual,
                                            double relative_tolerance = 1e-9);

std::string format_value(const Value& v);

// Instrumentation for evaluators. add_ops counts binary aggregation steps,
// i.e. folding a value or partial into a non-empty accumulator; summing x
// values costs x - 1 of them.
struct EvalStats {
  std::uint64_t add_ops = 0;
  double phase_one_seconds = 0;
  double phase_two_seconds = 0;
};

struct EvalOptions {
  unsigned threads = 1;
  EvalStats* stats = nullptr;
};

}  // namespace gwin
