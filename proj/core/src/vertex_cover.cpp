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
#include <optional>
#include <vector>

#include "bitgraph.hpp"
#include "gsg/solvers.hpp"

namespace gsg {
namespace {

using Cover = std::vector<Vertex>;

class CoverSearch {
 public:
  CoverSearch(const Graph& g, const SolverBudget& budget) : g_(g), guard_(budget) {}

  Cover run() { return *solve(VertexSet::full(g_.n), g_.n + 1); }

 private:
  // A minimum cover of G[alive], provided one of size < limit exists.
  std::optional<Cover> solve(VertexSet alive, std::size_t limit) {
    guard_.tick();
    Cover forced;
    reduce(alive, forced);
    if (forced.size() >= limit) return std::nullopt;
    if (alive.empty()) return forced;
    const std::size_t room = limit - forced.size();

    auto parts = components(alive);
    std::optional<Cover> rest;
    if (parts.size() > 1) {
      rest = solve_components(parts, room);
    } else {
      rest = branch(alive, room);
    }
    if (!rest) return std::nullopt;
    forced.insert(forced.end(), rest->begin(), rest->end());
    return forced;
  }

  std::optional<Cover> solve_components(const std::vector<VertexSet>& parts, std::size_t room) {
    std::vector<std::size_t> lower(parts.size());
    std::size_t pending = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      lower[i] = clique_partition_bound(parts[i]);
      pending += lower[i];
    }
    if (pending >= room) return std::nullopt;
    Cover out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      pending -= lower[i];
      const std::size_t limit = room - out.size() - pending;
      auto part = solve(parts[i], limit);
      if (!part) return std::nullopt;
      out.insert(out.end(), part->begin(), part->end());
    }
    return out;
  }

  // Branch on a maximum-degree vertex v: either v is in the cover or all of
  // its neighbors are.
  std::optional<Cover> branch(const VertexSet& alive, std::size_t room) {
    if (clique_partition_bound(alive) >= room) return std::nullopt;
    Vertex v = 0;
    std::size_t best_degree = 0;
    alive.for_each([&](Vertex u) {
      const std::size_t d = g_.rows[u].intersection_size(alive);
      if (d > best_degree) {
        best_degree = d;
        v = u;
      }
    });

    std::optional<Cover> best;
    std::size_t limit = room;

    VertexSet without_v = alive;
    without_v.erase(v);
    if (auto r = solve(without_v, limit - 1)) {
      r->push_back(v);
      limit = r->size();
      best = std::move(r);
    }

    const VertexSet nbrs = g_.rows[v] & alive;
    if (nbrs.size() < limit) {
      if (auto r = solve(without_v - nbrs, limit - nbrs.size())) {
        nbrs.for_each([&](Vertex u) { r->push_back(u); });
        best = std::move(r);
      }
    }
    return best;
  }

  // Removes isolated vertices and takes u whenever some neighbor v has
  // N[v] within N[u]; repeats to a fixed point.
  void reduce(VertexSet& alive, Cover& forced) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto i = alive.first(); i != VertexSet::npos; i = alive.next(i)) {
        const auto v = static_cast<Vertex>(i);
        VertexSet closed = g_.rows[v] & alive;
        if (closed.empty()) {
          alive.erase(v);
          changed = true;
          continue;
        }
        closed.insert(v);
        for (auto j = closed.first(); j != VertexSet::npos; j = closed.next(j)) {
          const auto u = static_cast<Vertex>(j);
          if (u == v) continue;
          VertexSet closed_u = g_.rows[u] & alive;
          closed_u.insert(u);
          if (closed.is_subset_of(closed_u)) {
            forced.push_back(u);
            alive.erase(u);
            changed = true;
            break;
          }
        }
      }
    }
  }

  std::vector<VertexSet> components(const VertexSet& alive) const {
    std::vector<VertexSet> out;
    VertexSet left = alive;
    while (!left.empty()) {
      VertexSet part(g_.n);
      VertexSet frontier(g_.n);
      frontier.insert(static_cast<Vertex>(left.first()));
      while (!frontier.empty()) {
        part |= frontier;
        VertexSet next(g_.n);
        frontier.for_each([&](Vertex v) { next |= g_.rows[v]; });
        next &= alive;
        next -= part;
        frontier = std::move(next);
      }
      left -= part;
      out.push_back(std::move(part));
    }
    return out;
  }

  // Any cover misses at most one vertex of each clique in a partition.
  std::size_t clique_partition_bound(const VertexSet& alive) const {
    VertexSet left = alive;
    std::size_t bound = 0;
    while (!left.empty()) {
      Vertex seed = static_cast<Vertex>(left.first());
      std::size_t seed_degree = g_.n + 1;
      left.for_each([&](Vertex v) {
        const std::size_t d = g_.rows[v].intersection_size(left);
        if (d < seed_degree) {
          seed_degree = d;
          seed = v;
        }
      });
      std::size_t size = 1;
      VertexSet candidates = g_.rows[seed] & left;
      left.erase(seed);
      while (!candidates.empty()) {
        const auto u = static_cast<Vertex>(candidates.first());
        candidates &= g_.rows[u];
        left.erase(u);
        ++size;
      }
      bound += size - 1;
    }
    return bound;
  }

  detail::BitGraph g_;
  BudgetGuard guard_;
};

}  // namespace

SetResult vertex_cover_number(const Graph& g, const SolverBudget& budget) {
  CoverSearch search(g, budget);
  auto cover = search.run();
  std::sort(cover.begin(), cover.end());
  return {cover.size(), VertexSet(g.order(), cover)};
}

SetResult independence_number(const Graph& g, const SolverBudget& budget) {
  auto cover = vertex_cover_number(g, budget);
  VertexSet independent = VertexSet::full(g.order()) - cover.witness;
  return {independent.size(), std::move(independent)};
}

}  // namespace gsg
