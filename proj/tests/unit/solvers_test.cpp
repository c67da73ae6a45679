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

#include "gsg/solvers.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "fixtures.hpp"
#include "gsg/corpus.hpp"
#include "gsg/sierpinski.hpp"
#include "gsg/validate.hpp"
#include "naive_oracle.hpp"

namespace gsg {
namespace {

using namespace ::gsg::testing;

std::vector<Graph> oracle_corpus() {
  std::vector<Graph> out = random_graphs(120, 1, 9, 0.35, 20260417);
  auto dense = random_graphs(60, 2, 9, 0.7, 99);
  out.insert(out.end(), dense.begin(), dense.end());
  for (std::size_t n = 1; n <= 5; ++n) {
    for (Graph& g : connected_graphs(n)) out.push_back(std::move(g));
  }
  return out;
}

TEST(SolversTest, ExampleGraphValues) {
  const Graph g = example_graph();
  const auto chi = chromatic_number(g);
  EXPECT_EQ(chi.value, 3u);
  EXPECT_TRUE(is_proper_coloring(g, chi.colors));
  const auto omega = clique_number(g);
  EXPECT_EQ(omega.value, 3u);
  EXPECT_EQ(omega.witness, (VertexSet(7, {2, 3, 4})));
  const auto beta = vertex_cover_number(g);
  EXPECT_EQ(beta.value, 3u);
  EXPECT_TRUE(is_vertex_cover(g, beta.witness));
  const auto alpha = independence_number(g);
  EXPECT_EQ(alpha.value, 4u);
  EXPECT_TRUE(is_independent_set(g, alpha.witness));
  const auto gamma = domination_number(g);
  EXPECT_EQ(gamma.value, 3u);
  EXPECT_TRUE(is_dominating_set(g, gamma.witness));
}

TEST(SolversTest, ExampleGraphGammaSets) {
  const Graph g = example_graph();
  const auto family = enumerate_gamma_sets(g);
  EXPECT_EQ(family.gamma, 3u);
  EXPECT_EQ(family.sets.size(), 7u);
  const auto x = xi(g, family);
  EXPECT_EQ(x.value, 2u);
  EXPECT_EQ(x.core.size(), 2u);
  EXPECT_TRUE(is_dominating_set(g, x.dominating_set));
}

TEST(SolversTest, SmallFamilies) {
  EXPECT_EQ(chromatic_number(Graph(1, {})).value, 1u);
  EXPECT_EQ(chromatic_number(Graph(3, {})).value, 1u);
  EXPECT_EQ(chromatic_number(cycle_graph(5)).value, 3u);
  EXPECT_EQ(chromatic_number(cycle_graph(6)).value, 2u);
  EXPECT_EQ(chromatic_number(complete_graph(6)).value, 6u);
  EXPECT_EQ(clique_number(Graph(4, {})).value, 1u);
  EXPECT_EQ(clique_number(complete_graph(5)).value, 5u);
  EXPECT_EQ(vertex_cover_number(star_graph(5)).value, 1u);
  EXPECT_EQ(vertex_cover_number(Graph(2, {})).value, 0u);
  EXPECT_EQ(independence_number(cycle_graph(7)).value, 3u);
  EXPECT_EQ(domination_number(path_graph(7)).value, 3u);
  EXPECT_EQ(domination_number(Graph(4, {})).value, 4u);
  EXPECT_EQ(domination_number(complete_graph(4)).value, 1u);
}

TEST(SolversTest, AgreeWithBruteForce) {
  for (const Graph& g : oracle_corpus()) {
    SCOPED_TRACE(to_edge_list(g));
    const auto chi = chromatic_number(g);
    EXPECT_EQ(chi.value, naive_chromatic_number(g));
    EXPECT_TRUE(is_proper_coloring(g, chi.colors));
    EXPECT_EQ(*std::max_element(chi.colors.begin(), chi.colors.end()), chi.value);

    const auto omega = clique_number(g);
    EXPECT_EQ(omega.value, naive_clique_number(g));
    EXPECT_TRUE(is_clique(g, omega.witness));
    EXPECT_EQ(omega.witness.size(), omega.value);

    const auto beta = vertex_cover_number(g);
    EXPECT_EQ(beta.value, naive_vertex_cover_number(g));
    EXPECT_TRUE(is_vertex_cover(g, beta.witness));
    EXPECT_EQ(beta.witness.size(), beta.value);

    const auto alpha = independence_number(g);
    EXPECT_EQ(alpha.value, naive_independence_number(g));
    EXPECT_TRUE(is_independent_set(g, alpha.witness));
    EXPECT_EQ(alpha.witness.size(), alpha.value);

    const auto gamma = domination_number(g);
    EXPECT_EQ(gamma.value, naive_domination_number(g));
    EXPECT_TRUE(is_dominating_set(g, gamma.witness));
    EXPECT_EQ(gamma.witness.size(), gamma.value);
  }
}

TEST(SolversTest, StructuralInequalities) {
  for (const Graph& g : oracle_corpus()) {
    const std::size_t alpha = independence_number(g).value;
    const std::size_t beta = vertex_cover_number(g).value;
    EXPECT_EQ(alpha + beta, g.order());
    EXPECT_LE(clique_number(g).value, chromatic_number(g).value);
    EXPECT_LE(domination_number(g).value, alpha);
  }
}

TEST(GammaSetsTest, AgreeWithBruteForceInLexOrder) {
  for (const Graph& g : oracle_corpus()) {
    SCOPED_TRACE(to_edge_list(g));
    const auto family = enumerate_gamma_sets(g);
    const auto expected = naive_gamma_sets(g);
    ASSERT_EQ(family.sets.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      EXPECT_EQ(to_mask(family.sets[i]), expected[i]);
    }
  }
}

TEST(GammaSetsTest, SmallExamples) {
  // Every pair of vertices of C4 dominates.
  EXPECT_EQ(enumerate_gamma_sets(cycle_graph(4)).sets.size(), 6u);
  EXPECT_TRUE(has_unique_gamma_set(star_graph(3)));
  EXPECT_FALSE(has_unique_gamma_set(path_graph(2)));
  EXPECT_EQ(enumerate_gamma_sets(path_graph(2)).sets.size(), 2u);
  EXPECT_TRUE(has_unique_gamma_set(Graph(1, {})));
  EXPECT_TRUE(has_unique_gamma_set(double_star()));
}

TEST(XiTest, CoreIsNonIsolatedPart) {
  const Graph g = path_graph(5);
  const VertexSet d(5, {0, 1, 3});
  EXPECT_EQ(non_isolated_core(g, d), (VertexSet(5, {0, 1})));
  EXPECT_TRUE(non_isolated_core(g, VertexSet(5, {1, 3})).empty());
}

TEST(XiTest, ShortcutMatchesSubsetSearch) {
  for (const Graph& g : oracle_corpus()) {
    SCOPED_TRACE(to_edge_list(g));
    const auto family = enumerate_gamma_sets(g);
    const auto x = xi(g, family);
    EXPECT_EQ(x.value, naive_xi(g));
    EXPECT_LE(x.value, family.gamma);
    for (const VertexSet& d : family.sets) {
      EXPECT_EQ(non_isolated_core(g, d).size(), naive_best_core(g, to_mask(d)));
    }
    EXPECT_EQ(x.core, non_isolated_core(g, x.dominating_set));
    EXPECT_EQ(xi(g).value, x.value);
  }
}

TEST(XiTest, KnownValues) {
  EXPECT_EQ(xi(star_graph(4)).value, 0u);
  EXPECT_EQ(xi(path_graph(2)).value, 0u);
  EXPECT_EQ(xi(cycle_graph(4)).value, 2u);
  EXPECT_EQ(xi(double_star()).value, 2u);
  EXPECT_EQ(xi(Graph(3, {})).value, 0u);
}

TEST(SolversTest, StarSierpinskiDepthTwo) {
  for (std::size_t r = 1; r <= 4; ++r) {
    const auto sg = build_direct(star_graph(r), 2);
    EXPECT_EQ(domination_number(sg.graph()).value, r + 1);
  }
}

TEST(SolversTest, TwoLeafStarAtDepthThreeIsAPath) {
  const auto sg = build_direct(star_graph(1), 3);
  EXPECT_EQ(sg.graph(), path_graph(8));
  EXPECT_EQ(domination_number(sg.graph()).value, 3u);
}

TEST(SolversTest, BudgetExceededThrows) {
  const Graph g = build_direct(example_graph(), 3).graph();
  const SolverBudget tiny{10, std::chrono::milliseconds{60'000}};
  EXPECT_THROW(domination_number(g, tiny), ResourceError);
  EXPECT_THROW(enumerate_gamma_sets(g, tiny), ResourceError);
}

}  // namespace
}  // namespace gsg
