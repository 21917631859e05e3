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

#include <ostream>

#include "gwin/aggregate.hpp"
#include "gwin/graph.hpp"

namespace gwin {

// "vertex,value" rows keyed by original label in ascending label order; NULL
// is an empty field.
void write_results_csv(std::ostream& out, const Graph& g, const ResultTable& results);

// [{"vertex": label, "value": number|null}, ...] in the same order.
void write_results_json(std::ostream& out, const Graph& g, const ResultTable& results);

}  // namespace gwin
