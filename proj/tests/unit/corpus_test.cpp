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

#include "gsg/corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "gsg/io.hpp"

namespace gsg {
namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.order(), edges);
}

TEST(CorpusTest, ConnectedGraphCounts) {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112};
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto graphs = connected_graphs(n);
    EXPECT_EQ(graphs.size(), expected[n - 1]) << "n=" << n;
    for (const Graph& g : graphs) {
      EXPECT_EQ(g.order(), n);
      EXPECT_TRUE(is_connected(g));
    }
  }
}

TEST(CorpusTest, TreeCounts) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11};
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto ts = trees(n);
    EXPECT_EQ(ts.size(), expected[n - 1]) << "n=" << n;
    for (const Graph& g : ts) EXPECT_TRUE(is_tree(g));
  }
}

TEST(CorpusTest, ConnectedGraphsArePairwiseNonIsomorphic) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::set<std::vector<bool>> codes;
    for (const Graph& g : connected_graphs(n)) codes.insert(canonical_code(g));
    EXPECT_EQ(codes.size(), connected_graphs(n).size());
  }
}

TEST(CanonicalTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(7);
  for (const Graph& g : random_graphs(60, 1, 8, 0.4, 11)) {
    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = relabel(g, perm);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_EQ(canonical_relabel(g), canonical_relabel(h));
  }
}

TEST(CanonicalTest, DistinguishesNonIsomorphicGraphs) {
  EXPECT_NE(canonical_code(path_graph(4)), canonical_code(star_graph(3)));
  // Same degree sequence, different graphs.
  const Graph c6 = cycle_graph(6);
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NE(canonical_code(c6), canonical_code(two_triangles));
}

TEST(RandomGraphsTest, DeterministicPerSeed) {
  const auto a = random_graphs(30, 2, 8, 0.5, 42);
  const auto b = random_graphs(30, 2, 8, 0.5, 42);
  ASSERT_EQ(a.size(), 30u);
  EXPECT_EQ(a, b);
  for (const Graph& g : a) {
    EXPECT_GE(g.order(), 2u);
    EXPECT_LE(g.order(), 8u);
  }
  EXPECT_NE(a, random_graphs(30, 2, 8, 0.5, 43));
}

TEST(FamilyTest, Names) {
  EXPECT_EQ(parse_family("all-connected"), Family::all_connected);
  EXPECT_EQ(parse_family("trees"), Family::trees);
  EXPECT_EQ(parse_family("files"), Family::files);
  EXPECT_FALSE(parse_family("everything").has_value());
  for (Family f : {Family::all_connected, Family::trees, Family::stars, Family::cycles,
                   Family::completes, Family::paths, Family::files}) {
    EXPECT_EQ(parse_family(to_string(f)), f);
  }
}

TEST(GenerateCorpusTest, IdsAndMembers) {
  const auto conn = generate_corpus(Family::all_connected, 1, 4);
  EXPECT_EQ(conn.size(), 1u + 1 + 2 + 6);
  EXPECT_EQ(conn.front().id, "conn1-001");
  EXPECT_EQ(conn.back().id, "conn4-006");

  const auto stars = generate_corpus(Family::stars, 2, 4);
  ASSERT_EQ(stars.size(), 3u);
  EXPECT_EQ(stars[0].id, "star-r2");
  EXPECT_EQ(stars[2].graph, star_graph(4));

  const auto cycles = generate_corpus(Family::cycles, 1, 5);
  ASSERT_EQ(cycles.size(), 3u);
  EXPECT_EQ(cycles[0].id, "cycle-3");

  const auto ts = generate_corpus(Family::trees, 6, 6);
  EXPECT_EQ(ts.size(), 6u);
  EXPECT_EQ(ts[2].id, "tree6-003");
}

TEST(GenerateCorpusTest, FilesFamily) {
  const auto path = std::filesystem::temp_directory_path() / "gsg_corpus_test_p3.txt";
  {
    std::ofstream out(path);
    write_edge_list(out, path_graph(3));
  }
  const auto files = generate_corpus(Family::files, 1, 1, {path});
  ASSERT_EQ(files.size(), 1u);
  EXPECT_EQ(files[0].id, "gsg_corpus_test_p3.txt");
  EXPECT_EQ(files[0].graph, path_graph(3));
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace gsg
