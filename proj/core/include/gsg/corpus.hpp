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

#ifndef GSG_CORPUS_HPP_
#define GSG_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsg/graph.hpp"

namespace gsg {

// Canonical form: adjacency upper triangle, maximized over all relabelings
// that list vertices by non-increasing degree. Equal iff isomorphic.
std::vector<bool> canonical_code(const Graph& g);
Graph canonical_relabel(const Graph& g);

// All connected graphs on n vertices up to isomorphism, canonically labelled
// and sorted by (size, canonical code). Generated by orderly vertex
// augmentation from connected(n-1) with isomorph rejection.
std::vector<Graph> connected_graphs(std::size_t n);

// All trees on n vertices up to isomorphism, same ordering.
std::vector<Graph> trees(std::size_t n);

// G(n, p) with a fixed-seed engine; reproducible across platforms.
std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n,
                                 std::size_t max_n, double edge_probability,
                                 std::uint64_t seed);

enum class Family {
  all_connected,
  trees,
  stars,
  cycles,
  completes,
  paths,
  files,
};

std::optional<Family> parse_family(std::string_view name);
std::string_view to_string(Family f);

struct CorpusGraph {
  std::string id;
  Graph graph;
};

// Family members for sizes min_n..max_n (for stars: r in min_n..max_n; for
// cycles n starts at 3). files: one graph per path, id = file name.
std::vector<CorpusGraph> generate_corpus(Family family, std::size_t min_n,
                                         std::size_t max_n,
                                         const std::vector<std::filesystem::path>& files = {});

}  // namespace gsg

#endif  // GSG_CORPUS_HPP_
