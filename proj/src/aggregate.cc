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

#include "gwin/aggregate.hpp"

#include <charconv>
#include <cmath>

namespace gwin {
namespace {

template <class F>
void with_kernel(AggregateFunction fn, NumericKind kind, F&& f) {
  auto typed = [&](auto zero) {
    using T = decltype(zero);
    switch (fn) {
      case AggregateFunction::kSum:
        f(kernel::Sum<T>{});
        break;
      case AggregateFunction::kCount:
        f(kernel::Count<T>{});
        break;
      case AggregateFunction::kAvg:
        f(kernel::Avg<T>{});
        break;
      case AggregateFunction::kMin:
        f(kernel::Min<T>{});
        break;
      case AggregateFunction::kMax:
        f(kernel::Max<T>{});
        break;
    }
  };
  if (kind == NumericKind::kInteger) {
    typed(std::int64_t{0});
  } else {
    typed(0.0);
  }
}

}  // namespace

const char* to_string(AggregateFunction f) {
  switch (f) {
    case AggregateFunction::kSum:
      return "sum";
    case AggregateFunction::kCount:
      return "count";
    case AggregateFunction::kAvg:
      return "avg";
    case AggregateFunction::kMin:
      return "min";
    case AggregateFunction::kMax:
      return "max";
  }
  return "?";
}

AggregateFunction parse_aggregate_function(const std::string& name) {
  for (auto f : {AggregateFunction::kSum, AggregateFunction::kCount,
                 AggregateFunction::kAvg, AggregateFunction::kMin,
                 AggregateFunction::kMax}) {
    if (name == to_string(f)) return f;
  }
  throw UsageError("unknown aggregate function '" + name + "'");
}

PartialAggregate::PartialAggregate(AggregateFunction function, NumericKind kind)
    : function_(function), kind_(kind), state_(std::int64_t{0}) {
  with_kernel(function, kind, [&](auto k) {
    state_ = decltype(k)::identity();
  });
}

PartialAggregate init_partial(AggregateFunction function, NumericKind kind) {
  return PartialAggregate(function, kind);
}

PartialAggregate init_partial(const AggregateSpec& spec, const AttributeTable& attrs) {
  if (spec.function == AggregateFunction::kCount) {
    return PartialAggregate(spec.function, NumericKind::kInteger);
  }
  return PartialAggregate(spec.function, attrs.column(spec.attribute).kind());
}

PartialAggregate accumulate(PartialAggregate p, Number value) {
  with_kernel(p.function_, p.kind_, [&](auto k) {
    using K = decltype(k);
    using T = typename K::value_type;
    T x{};
    if (const auto* i = std::get_if<std::int64_t>(&value)) {
      x = static_cast<T>(*i);
    } else if constexpr (std::is_same_v<T, double>) {
      x = std::get<double>(value);
    } else {
      throw UsageError("real value folded into an integer aggregate");
    }
    K::add(std::get<typename K::State>(p.state_), x);
  });
  ++p.folded_;
  return p;
}

PartialAggregate combine(const PartialAggregate& a, const PartialAggregate& b) {
  if (a.function_ != b.function_ || a.kind_ != b.kind_) {
    throw UsageError("cannot combine partial aggregates of different functions");
  }
  PartialAggregate out = a;
  with_kernel(a.function_, a.kind_, [&](auto k) {
    using K = decltype(k);
    K::merge(std::get<typename K::State>(out.state_),
             std::get<typename K::State>(b.state_));
  });
  out.folded_ += b.folded_;
  return out;
}

Value finalize(const PartialAggregate& p) {
  Value out;
  with_kernel(p.function(), p.kind(), [&](auto k) {
    using K = decltype(k);
    out = K::finalize(std::get<typename K::State>(p.state()));
  });
  return out;
}

bool values_match(const Value& expected, const Value& actual,
                  double relative_tolerance) {
  if (expected.index() != actual.index()) return false;
  if (const auto* e = std::get_if<double>(&expected)) {
    const double a = std::get<double>(actual);
    if (*e == a) return true;
    const double scale = std::max(std::fabs(*e), std::fabs(a));
    return std::fabs(*e - a) <= relative_tolerance * scale;
  }
  return expected == actual;
}

std::vector<ResultMismatch> compare_results(const ResultTable& expected,
                                            const ResultTable& actual,
                                            double relative_tolerance) {
  if (expected.size() != actual.size()) {
    throw UsageError("result tables differ in size");
  }
  std::vector<ResultMismatch> out;
  for (VertexId v = 0; v < expected.size(); ++v) {
    if (!values_match(expected[v], actual[v], relative_tolerance)) {
      out.push_back({v, expected[v], actual[v]});
    }
  }
  return out;
}

std::string format_value(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "";
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(v));
  return std::string(buf, ptr);
}

}  // namespace gwin
