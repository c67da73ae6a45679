// Copyright 2026 The gsg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GSG_VALIDATE_HPP_
#define GSG_VALIDATE_HPP_

#include <cstdint>
#include <span>

#include "gsg/graph.hpp"

// Witness checkers. These only read the graph and never call a solver.
namespace gsg {

// Colors must be positive; no edge may join equal colors.
bool is_proper_coloring(const Graph& g, std::span<const std::uint32_t> colors);
bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent_set(const Graph& g, const VertexSet& s);
bool is_vertex_cover(const Graph& g, const VertexSet& s);
bool is_dominating_set(const Graph& g, const VertexSet& s);

}  // namespace gsg

#endif  // GSG_VALIDATE_HPP_
