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

#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"
#include "gsg/corpus.hpp"

namespace gsg {
namespace {

using ::gsg::testing::example_graph;

TEST(GraphTest, RejectsMalformedInput) {
  EXPECT_THROW(Graph(0, {}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(3, {{1, 1}}), GraphError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), GraphError);
}

TEST(GraphTest, NormalizesEdgeOrientation) {
  Graph g(3, {{2, 0}, {1, 0}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}}));
  EXPECT_TRUE(g.adjacent(2, 0));
  EXPECT_FALSE(g.adjacent(1, 2));
}

TEST(GraphTest, Leaves) {
  EXPECT_EQ(leaves(star_graph(3)).to_vector(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(leaves(example_graph()).to_vector(), (std::vector<Vertex>{0, 1, 6}));
  EXPECT_TRUE(leaves(complete_graph(3)).empty());
}

TEST(GraphTest, Supports) {
  auto star = supports(star_graph(3));
  EXPECT_EQ(star.supports.to_vector(), (std::vector<Vertex>{0}));
  EXPECT_EQ(star.leaf_count[0], 3u);

  auto fig = supports(example_graph());
  EXPECT_EQ(fig.supports.to_vector(), (std::vector<Vertex>{2, 3, 5}));
  for (Vertex x : {2u, 3u, 5u}) EXPECT_EQ(fig.leaf_count[x], 1u);

  // P2: every vertex is both a leaf and a support.
  auto p2 = supports(path_graph(2));
  EXPECT_EQ(p2.supports.to_vector(), (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(p2.leaf_count, (std::vector<std::size_t>{1, 1}));
  EXPECT_EQ(leaves(path_graph(2)), p2.supports);
}

TEST(GraphTest, InducedIsolatedCount) {
  const Graph c4 = cycle_graph(4);
  EXPECT_EQ(induced_isolated_count(c4, VertexSet(4, {0, 1})), 0u);
  EXPECT_EQ(induced_isolated_count(c4, VertexSet(4, {0, 2})), 2u);
  EXPECT_EQ(induced_isolated_count(c4, VertexSet(4)), 0u);
}

TEST(GraphTest, IsTree) {
  EXPECT_TRUE(is_tree(path_graph(4)));
  EXPECT_FALSE(is_tree(complete_graph(3)));
  EXPECT_FALSE(is_tree(example_graph()));
  EXPECT_TRUE(is_tree(Graph(1, {})));
  EXPECT_FALSE(is_tree(Graph(4, {{0, 1}, {2, 3}, {1, 2}, {0, 2}})));
  // Right edge count but disconnected.
  EXPECT_FALSE(is_tree(Graph(4, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST(GraphTest, StructuralInvariantsOverRandomGraphs) {
  for (const Graph& g : random_graphs(200, 1, 10, 0.35, 7)) {
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      degree_sum += g.degree(v);
      for (Vertex u : g.neighbors(v)) EXPECT_TRUE(g.adjacent(u, v));
    }
    EXPECT_EQ(degree_sum, 2 * g.size());

    const auto leaf_set = leaves(g);
    const auto info = supports(g);
    EXPECT_EQ(std::accumulate(info.leaf_count.begin(), info.leaf_count.end(), std::size_t{0}),
              leaf_set.size());

    // Leaves and supports only overlap on isolated edges (P2 components).
    (leaf_set & info.supports).for_each([&](Vertex v) {
      EXPECT_EQ(g.degree(g.neighbors(v).front()), 1u);
    });
  }
}

}  // namespace
}  // namespace gsg
