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
#include <vector>

#include "bitgraph.hpp"
#include "gsg/solvers.hpp"

namespace gsg {
namespace {

constexpr std::size_t kInfeasible = static_cast<std::size_t>(-1) / 2;

class DominationSearch {
 public:
  DominationSearch(const Graph& g, const SolverBudget& budget)
      : g_(g, /*closed=*/true), guard_(budget) {}

  std::vector<Vertex> run() {
    best_ = greedy();
    search(VertexSet::full(g_.n), VertexSet(g_.n));
    return best_;
  }

 private:
  std::vector<Vertex> greedy() const {
    std::vector<Vertex> out;
    VertexSet undominated = VertexSet::full(g_.n);
    while (!undominated.empty()) {
      Vertex pick = 0;
      std::size_t cover = 0;
      for (Vertex v = 0; v < g_.n; ++v) {
        const std::size_t c = g_.rows[v].intersection_size(undominated);
        if (c > cover) {
          cover = c;
          pick = v;
        }
      }
      out.push_back(pick);
      undominated -= g_.rows[pick];
    }
    return out;
  }

  // Max of a packing bound (undominated vertices with pairwise disjoint
  // candidate sets) and a counting bound.
  std::size_t lower_bound(const VertexSet& undominated, const VertexSet& excluded) const {
    std::size_t max_cover = 0;
    for (Vertex v = 0; v < g_.n; ++v) {
      if (excluded.contains(v)) continue;
      max_cover = std::max(max_cover, g_.rows[v].intersection_size(undominated));
    }
    if (max_cover == 0) return kInfeasible;
    const std::size_t counting = (undominated.size() + max_cover - 1) / max_cover;

    std::size_t packing = 0;
    VertexSet used(g_.n);
    undominated.for_each([&](Vertex u) {
      VertexSet candidates = g_.rows[u] - excluded;
      if (!candidates.intersects(used)) {
        ++packing;
        used |= candidates;
      }
    });
    return std::max(counting, packing);
  }

  void search(const VertexSet& undominated, const VertexSet& excluded) {
    guard_.tick();
    if (undominated.empty()) {
      if (chosen_.size() < best_.size()) best_ = chosen_;
      return;
    }
    if (chosen_.size() + 1 >= best_.size()) return;
    const std::size_t lb = lower_bound(undominated, excluded);
    if (lb >= kInfeasible || chosen_.size() + lb >= best_.size()) return;

    // The undominated vertex with the fewest candidate dominators.
    Vertex target = 0;
    std::size_t fewest = g_.n + 2;
    for (auto i = undominated.first(); i != VertexSet::npos; i = undominated.next(i)) {
      const std::size_t c = (g_.rows[i] - excluded).size();
      if (c < fewest) {
        fewest = c;
        target = static_cast<Vertex>(i);
      }
    }
    if (fewest == 0) return;

    // Drop candidates whose new coverage is contained in another's.
    const auto candidates = (g_.rows[target] - excluded).to_vector();
    std::vector<VertexSet> cover;
    cover.reserve(candidates.size());
    for (Vertex c : candidates) cover.push_back(g_.rows[c] & undominated);
    std::vector<std::size_t> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        if (a == b || !cover[a].is_subset_of(cover[b])) continue;
        dominated = !(cover[a] == cover[b]) || b < a;
      }
      if (!dominated) kept.push_back(a);
    }
    std::stable_sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
      return cover[a].size() > cover[b].size();
    });

    VertexSet banned = excluded;
    for (std::size_t a : kept) {
      chosen_.push_back(candidates[a]);
      search(undominated - cover[a], banned);
      chosen_.pop_back();
      banned.insert(candidates[a]);
    }
  }

  detail::BitGraph g_;
  BudgetGuard guard_;
  std::vector<Vertex> chosen_;
  std::vector<Vertex> best_;
};

// Include/exclude DFS over vertices in increasing order with the size fixed
// at gamma; include-first order emits sets lexicographically.
class GammaSetEnumerator {
 public:
  GammaSetEnumerator(const Graph& g, std::size_t gamma, const SolverBudget& budget)
      : g_(g, /*closed=*/true), gamma_(gamma), guard_(budget), suffix_(g_.n + 1, VertexSet(g_.n)) {
    for (std::size_t i = g_.n; i-- > 0;) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i].insert(static_cast<Vertex>(i));
    }
  }

  std::vector<VertexSet> run() {
    VertexSet chosen(g_.n);
    dfs(0, VertexSet::full(g_.n), chosen, 0);
    return std::move(found_);
  }

 private:
  void dfs(std::size_t i, const VertexSet& undominated, VertexSet& chosen, std::size_t count) {
    guard_.tick();
    if (count == gamma_) {
      if (undominated.empty()) found_.push_back(chosen);
      return;
    }
    if (i == g_.n) return;

    // Each undominated vertex needs a dominator among i..n-1, and those with
    // disjoint options need distinct ones.
    std::size_t packing = 0;
    VertexSet used(g_.n);
    for (auto u = undominated.first(); u != VertexSet::npos; u = undominated.next(u)) {
      VertexSet options = g_.rows[u] & suffix_[i];
      if (options.empty()) return;
      if (!options.intersects(used)) {
        ++packing;
        used |= options;
      }
    }
    if (count + packing > gamma_) return;

    const auto v = static_cast<Vertex>(i);
    chosen.insert(v);
    dfs(i + 1, undominated - g_.rows[v], chosen, count + 1);
    chosen.erase(v);
    dfs(i + 1, undominated, chosen, count);
  }

  detail::BitGraph g_;
  std::size_t gamma_;
  BudgetGuard guard_;
  std::vector<VertexSet> suffix_;
  std::vector<VertexSet> found_;
};

}  // namespace

SetResult domination_number(const Graph& g, const SolverBudget& budget) {
  DominationSearch search(g, budget);
  auto set = search.run();
  std::sort(set.begin(), set.end());
  return {set.size(), VertexSet(g.order(), set)};
}

GammaSetFamily enumerate_gamma_sets(const Graph& g, const SolverBudget& budget) {
  const std::size_t gamma = domination_number(g, budget).value;
  GammaSetEnumerator enumerator(g, gamma, budget);
  return {gamma, enumerator.run()};
}

VertexSet non_isolated_core(const Graph& g, const VertexSet& d) {
  return d - induced_isolated(g, d);
}

XiResult xi(const Graph& g, const GammaSetFamily& family) {
  XiResult best;
  bool have = false;
  for (const auto& d : family.sets) {
    auto core = non_isolated_core(g, d);
    if (!have || core.size() > best.value) {
      best = {core.size(), d, std::move(core)};
      have = true;
    }
  }
  return best;
}

XiResult xi(const Graph& g, const SolverBudget& budget) {
  return xi(g, enumerate_gamma_sets(g, budget));
}

bool has_unique_gamma_set(const Graph& g, const SolverBudget& budget) {
  return enumerate_gamma_sets(g, budget).sets.size() == 1;
}

}  // namespace gsg
