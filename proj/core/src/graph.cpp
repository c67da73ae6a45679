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

#include "gsg/graph.hpp"

#include <algorithm>
#include <string>

namespace gsg {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw GraphError("graph must have at least one vertex");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                       "} has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw GraphError("duplicate edge {" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + "}");
  }

  std::vector<std::size_t> deg(n, 0);
  for (auto [u, v] : edges_) {
    ++deg[u];
    ++deg[v];
  }
  adjacency_.resize(n);
  for (std::size_t v = 0; v < n; ++v) adjacency_[v].reserve(deg[v]);
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  // Edges are sorted by (u, v), so the lists of the smaller endpoint are
  // already sorted; the others need it.
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_.at(u);
  return std::binary_search(list.begin(), list.end(), v);
}

VertexSet Graph::neighborhood(Vertex v) const {
  return VertexSet(order(), neighbors(v));
}

VertexSet Graph::closed_neighborhood(Vertex v) const {
  auto s = neighborhood(v);
  s.insert(v);
  return s;
}

VertexSet leaves(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

SupportInfo supports(const Graph& g) {
  SupportInfo info{VertexSet(g.order()), std::vector<std::size_t>(g.order(), 0)};
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 1) continue;
    Vertex x = g.neighbors(v).front();
    info.supports.insert(x);
    ++info.leaf_count[x];
  }
  return info;
}

VertexSet induced_isolated(const Graph& g, const VertexSet& s) {
  VertexSet out(g.order());
  s.for_each([&](Vertex v) {
    bool isolated = std::none_of(g.neighbors(v).begin(), g.neighbors(v).end(),
                                 [&](Vertex u) { return s.contains(u); });
    if (isolated) out.insert(v);
  });
  return out;
}

std::size_t induced_isolated_count(const Graph& g, const VertexSet& s) {
  return induced_isolated(g, s).size();
}

bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == g.order();
}

bool is_tree(const Graph& g) {
  return g.size() + 1 == g.order() && is_connected(g);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v - 1), static_cast<Vertex>(v));
  }
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.emplace_back(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  }
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph star_graph(std::size_t r) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= r; ++v) edges.emplace_back(0, v);
  return Graph(r + 1, edges);
}

}  // namespace gsg
