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

#include "gwin/aggregate.hpp"
#include "gwin/attributes.hpp"
#include "gwin/graph.hpp"
#include "gwin/window.hpp"

namespace gwin {

// Non-indexed evaluation: materialize each vertex's window by traversal and
// fold the attribute over it. This is the reference every index is checked
// against and the benchmark baseline.
ResultTable evaluate_nonindexed(const Graph& g, const AttributeTable& attrs,
                                const WindowSpec& window,
                                const AggregateSpec& aggregate,
                                EvalOptions options = {});

}  // namespace gwin
