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

#ifndef GSG_SRC_BITGRAPH_HPP_
#define GSG_SRC_BITGRAPH_HPP_

#include <vector>

#include "gsg/graph.hpp"

namespace gsg::detail {

// Per-vertex neighbor bit-sets for the exact solvers.
struct BitGraph {
  explicit BitGraph(const Graph& g, bool closed = false) : n(g.order()) {
    rows.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      rows.push_back(closed ? g.closed_neighborhood(v) : g.neighborhood(v));
    }
  }

  std::size_t n;
  std::vector<VertexSet> rows;
};

}  // namespace gsg::detail

#endif  // GSG_SRC_BITGRAPH_HPP_
