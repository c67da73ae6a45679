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

#include <vector>

#include "bitgraph.hpp"
#include "gsg/solvers.hpp"

namespace gsg {
namespace {

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, const SolverBudget& budget) : g_(g), guard_(budget) {}

  std::vector<Vertex> run() {
    expand(VertexSet::full(g_.n));
    return best_;
  }

 private:
  // Greedy sequential coloring of the candidates; bound[k] is the color of
  // order[k], an upper bound on the clique size within order[0..k].
  void color_sort(const VertexSet& candidates, std::vector<Vertex>& order,
                  std::vector<std::size_t>& bound) const {
    VertexSet uncolored = candidates;
    std::size_t color = 0;
    while (!uncolored.empty()) {
      ++color;
      VertexSet q = uncolored;
      for (auto v = q.first(); v != VertexSet::npos; v = q.first()) {
        q.erase(static_cast<Vertex>(v));
        q -= g_.rows[v];
        uncolored.erase(static_cast<Vertex>(v));
        order.push_back(static_cast<Vertex>(v));
        bound.push_back(color);
      }
    }
  }

  void expand(VertexSet candidates) {
    guard_.tick();
    std::vector<Vertex> order;
    std::vector<std::size_t> bound;
    color_sort(candidates, order, bound);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (current_.size() + bound[k] <= best_.size()) return;
      const Vertex v = order[k];
      current_.push_back(v);
      VertexSet next = candidates & g_.rows[v];
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      candidates.erase(v);
    }
  }

  detail::BitGraph g_;
  BudgetGuard guard_;
  std::vector<Vertex> current_;
  std::vector<Vertex> best_;
};

}  // namespace

SetResult clique_number(const Graph& g, const SolverBudget& budget) {
  CliqueSearch search(g, budget);
  auto clique = search.run();
  return {clique.size(), VertexSet(g.order(), clique)};
}

}  // namespace gsg
