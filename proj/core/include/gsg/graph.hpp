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

#ifndef GSG_GRAPH_HPP_
#define GSG_GRAPH_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gsg/vertex_set.hpp"

namespace gsg {

// Unordered pair stored with first < second.
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertices 0..n-1, immutable after construction.
//
// Edges are kept sorted by (min, max) endpoint and neighbor lists are sorted,
// so two graphs with the same edge set compare equal edge-list-wise.
class Graph {
 public:
  // Throws GraphError on n == 0, out-of-range endpoints, self-loops or
  // duplicate edges. Edges may be given in either orientation.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  VertexSet neighborhood(Vertex v) const;
  VertexSet closed_neighborhood(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

using BaseGraph = Graph;

// Vertices of degree exactly one.
VertexSet leaves(const Graph& g);

struct SupportInfo {
  VertexSet supports;
  // leaf_count[x] = number of degree-one neighbors of x; zero off supports.
  std::vector<std::size_t> leaf_count;
};

SupportInfo supports(const Graph& g);

// Number of members of s with no neighbor inside s.
std::size_t induced_isolated_count(const Graph& g, const VertexSet& s);

// Members of s that have no neighbor inside s.
VertexSet induced_isolated(const Graph& g, const VertexSet& s);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// Small named families used by tests, the corpus generator and the CLI.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// K_{1,r} with center 0 and leaves 1..r.
Graph star_graph(std::size_t r);

}  // namespace gsg

#endif  // GSG_GRAPH_HPP_
