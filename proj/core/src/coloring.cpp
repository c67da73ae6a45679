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

#include <algorithm>
#include <cstdint>
#include <vector>

#include "gsg/solvers.hpp"

namespace gsg {
namespace {

// DSATUR state shared by the greedy pass and the exact k-colorability search.
class Dsatur {
 public:
  Dsatur(const Graph& g, std::size_t k)
      : g_(g), k_(k), color_(g.order(), 0), counts_(g.order() * (k + 1), 0),
        saturation_(g.order(), 0) {}

  // Uncolored vertex of maximum saturation, then maximum degree, then lowest
  // index; order() when all are colored.
  Vertex select() const {
    Vertex pick = static_cast<Vertex>(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v] != 0) continue;
      if (pick == g_.order() || saturation_[v] > saturation_[pick] ||
          (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick))) {
        pick = v;
      }
    }
    return pick;
  }

  bool allowed(Vertex v, std::uint32_t c) const { return counts_[v * (k_ + 1) + c] == 0; }

  void assign(Vertex v, std::uint32_t c) {
    color_[v] = c;
    for (Vertex u : g_.neighbors(v)) {
      if (counts_[u * (k_ + 1) + c]++ == 0) ++saturation_[u];
    }
  }

  void unassign(Vertex v) {
    const std::uint32_t c = color_[v];
    color_[v] = 0;
    for (Vertex u : g_.neighbors(v)) {
      if (--counts_[u * (k_ + 1) + c] == 0) --saturation_[u];
    }
  }

  const std::vector<std::uint32_t>& colors() const { return color_; }

 private:
  const Graph& g_;
  std::size_t k_;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::size_t> saturation_;
};

std::vector<std::uint32_t> greedy_dsatur(const Graph& g) {
  Dsatur state(g, g.order());
  for (std::size_t step = 0; step < g.order(); ++step) {
    Vertex v = state.select();
    std::uint32_t c = 1;
    while (!state.allowed(v, c)) ++c;
    state.assign(v, c);
  }
  return state.colors();
}

class KColoring {
 public:
  KColoring(const Graph& g, std::size_t k, BudgetGuard& guard)
      : g_(g), k_(k), state_(g, k), guard_(guard) {}

  // Pre-colors the clique with 1..|clique| to break color symmetry.
  bool run(const std::vector<Vertex>& clique) {
    std::uint32_t c = 0;
    for (Vertex v : clique) state_.assign(v, ++c);
    return search(clique.size(), c);
  }

  const std::vector<std::uint32_t>& colors() const { return state_.colors(); }

 private:
  bool search(std::size_t colored, std::uint32_t used) {
    guard_.tick();
    if (colored == g_.order()) return true;
    const Vertex v = state_.select();
    const std::uint32_t top = static_cast<std::uint32_t>(std::min<std::size_t>(used + 1, k_));
    for (std::uint32_t c = 1; c <= top; ++c) {
      if (!state_.allowed(v, c)) continue;
      state_.assign(v, c);
      if (search(colored + 1, std::max(used, c))) return true;
      state_.unassign(v);
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  Dsatur state_;
  BudgetGuard& guard_;
};

}  // namespace

ColoringResult chromatic_number(const Graph& g, const SolverBudget& budget) {
  auto best = greedy_dsatur(g);
  const std::size_t upper = *std::max_element(best.begin(), best.end());
  const auto clique = clique_number(g, budget).witness.to_vector();

  BudgetGuard guard(budget);
  for (std::size_t k = clique.size(); k < upper; ++k) {
    KColoring search(g, k, guard);
    if (search.run(clique)) return {k, search.colors()};
  }
  return {upper, std::move(best)};
}

}  // namespace gsg
