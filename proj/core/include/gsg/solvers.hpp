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

#ifndef GSG_SOLVERS_HPP_
#define GSG_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gsg/budget.hpp"
#include "gsg/graph.hpp"

namespace gsg {

struct ColoringResult {
  std::size_t value = 0;
  // colors[v] in 1..value.
  std::vector<std::uint32_t> colors;
};

struct SetResult {
  std::size_t value = 0;
  VertexSet witness;
};

// Every solver is exact and deterministic. A solve that runs out of budget
// throws ResourceError.

// Iterative deepening on k with a DSATUR upper bound and clique lower bound.
ColoringResult chromatic_number(const Graph& g, const SolverBudget& budget = {});

// Branch and bound with greedy-coloring bounds.
SetResult clique_number(const Graph& g, const SolverBudget& budget = {});

// Branch and reduce (domination rule, which subsumes degree one and the
// degree-two triangle case), component splitting, clique-partition bound.
SetResult vertex_cover_number(const Graph& g, const SolverBudget& budget = {});

// Complement of a minimum vertex cover.
SetResult independence_number(const Graph& g, const SolverBudget& budget = {});

// Branching on the undominated vertex with fewest candidate dominators,
// greedy upper bound and a packing lower bound.
SetResult domination_number(const Graph& g, const SolverBudget& budget = {});

// All minimum dominating sets, in lexicographic order of their sorted members.
struct GammaSetFamily {
  std::size_t gamma = 0;
  std::vector<VertexSet> sets;
};

GammaSetFamily enumerate_gamma_sets(const Graph& g, const SolverBudget& budget = {});

// D minus the vertices isolated in <D>: the largest subset of D whose induced
// subgraph has no isolated vertex.
VertexSet non_isolated_core(const Graph& g, const VertexSet& d);

struct XiResult {
  std::size_t value = 0;
  // First gamma-set in lexicographic order attaining the maximum, and its
  // non-isolated core.
  VertexSet dominating_set;
  VertexSet core;
};

XiResult xi(const Graph& g, const GammaSetFamily& family);
XiResult xi(const Graph& g, const SolverBudget& budget = {});

bool has_unique_gamma_set(const Graph& g, const SolverBudget& budget = {});

}  // namespace gsg

#endif  // GSG_SOLVERS_HPP_
