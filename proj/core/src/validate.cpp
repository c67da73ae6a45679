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

#include "gsg/validate.hpp"

#include <algorithm>

namespace gsg {

bool is_proper_coloring(const Graph& g, std::span<const std::uint32_t> colors) {
  if (colors.size() != g.order()) return false;
  if (std::find(colors.begin(), colors.end(), 0u) != colors.end()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return colors[e.first] == colors[e.second]; });
}

bool is_clique(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) return false;
  const auto members = s.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return s.contains(e.first) && s.contains(e.second);
  });
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    return s.contains(e.first) || s.contains(e.second);
  });
}

bool is_dominating_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (s.contains(v)) continue;
    auto nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex u) { return s.contains(u); })) {
      return false;
    }
  }
  return true;
}

}  // namespace gsg
