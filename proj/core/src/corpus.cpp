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

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

#include "gsg/io.hpp"

namespace gsg {
namespace {

// Column-major upper triangle: bits (0,1), (0,2), (1,2), (0,3), ... so that
// placing the vertex at position j fixes a contiguous block of the code.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), used_(n_, false) {
    std::vector<Vertex> by_degree(n_);
    for (Vertex v = 0; v < n_; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex v : by_degree) slot_degree_.push_back(g.degree(v));
  }

  void run() {
    perm_.clear();
    current_.clear();
    dfs(0);
  }

  const std::vector<bool>& code() const { return best_; }
  const std::vector<Vertex>& labeling() const { return best_perm_; }

 private:
  void dfs(std::size_t pos) {
    if (pos == n_) {
      if (!have_best_ || current_ > best_) {
        best_ = current_;
        best_perm_ = perm_;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || g_.degree(v) != slot_degree_[pos]) continue;
      const std::size_t mark = current_.size();
      for (std::size_t i = 0; i < pos; ++i) current_.push_back(g_.adjacent(perm_[i], v));
      if (have_best_ && std::lexicographical_compare(current_.begin(), current_.end(),
                                                     best_.begin(), best_.begin() + current_.size())) {
        current_.resize(mark);
        continue;
      }
      used_[v] = true;
      perm_.push_back(v);
      dfs(pos + 1);
      perm_.pop_back();
      used_[v] = false;
      current_.resize(mark);
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> slot_degree_;
  std::vector<bool> used_;
  std::vector<Vertex> perm_;
  std::vector<bool> current_;
  std::vector<bool> best_;
  std::vector<Vertex> best_perm_;
  bool have_best_ = false;
};

Graph relabel(const Graph& g, const std::vector<Vertex>& position_to_vertex) {
  std::vector<Vertex> position(g.order());
  for (std::size_t p = 0; p < position_to_vertex.size(); ++p) {
    position[position_to_vertex[p]] = static_cast<Vertex>(p);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  return Graph(g.order(), edges);
}

Graph add_vertex(const Graph& g, const std::vector<Vertex>& attach) {
  std::vector<Edge> edges = g.edges();
  const auto v = static_cast<Vertex>(g.order());
  for (Vertex u : attach) edges.emplace_back(u, v);
  return Graph(g.order() + 1, edges);
}

using CanonKey = std::pair<std::size_t, std::vector<bool>>;

std::vector<Graph> sorted_values(std::map<CanonKey, Graph>& found) {
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, graph] : found) out.push_back(std::move(graph));
  return out;
}

std::mutex cache_mutex;
std::map<std::size_t, std::vector<Graph>> connected_cache;
std::map<std::size_t, std::vector<Graph>> tree_cache;

std::string padded(std::size_t value, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, value);
  return buf;
}

}  // namespace

std::vector<bool> canonical_code(const Graph& g) {
  Canonizer c(g);
  c.run();
  return c.code();
}

Graph canonical_relabel(const Graph& g) {
  Canonizer c(g);
  c.run();
  return relabel(g, c.labeling());
}

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = connected_cache.find(n); it != connected_cache.end()) return it->second;
  }
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph(1, {}));
  } else {
    // Every connected graph has a vertex whose removal leaves it connected,
    // so augmenting connected(n-1) by one vertex reaches all of connected(n).
    std::map<CanonKey, Graph> found;
    for (const Graph& parent : connected_graphs(n - 1)) {
      const std::size_t k = parent.order();
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        std::vector<Vertex> attach;
        for (Vertex u = 0; u < k; ++u) {
          if (mask >> u & 1) attach.push_back(u);
        }
        Graph child = add_vertex(parent, attach);
        Canonizer c(child);
        c.run();
        CanonKey key{child.size(), c.code()};
        if (!found.contains(key)) found.emplace(std::move(key), relabel(child, c.labeling()));
      }
    }
    out = sorted_values(found);
  }
  std::lock_guard lock(cache_mutex);
  connected_cache.emplace(n, out);
  return out;
}

std::vector<Graph> trees(std::size_t n) {
  if (n == 0) throw std::invalid_argument("n must be at least 1");
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = tree_cache.find(n); it != tree_cache.end()) return it->second;
  }
  std::vector<Graph> out;
  if (n == 1) {
    out.push_back(Graph(1, {}));
  } else {
    std::map<CanonKey, Graph> found;
    for (const Graph& parent : trees(n - 1)) {
      for (Vertex u = 0; u < parent.order(); ++u) {
        Graph child = add_vertex(parent, {u});
        Canonizer c(child);
        c.run();
        CanonKey key{child.size(), c.code()};
        if (!found.contains(key)) found.emplace(std::move(key), relabel(child, c.labeling()));
      }
    }
    out = sorted_values(found);
  }
  std::lock_guard lock(cache_mutex);
  tree_cache.emplace(n, out);
  return out;
}

std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n,
                                 double edge_probability, std::uint64_t seed) {
  if (min_n == 0 || min_n > max_n) throw std::invalid_argument("need 1 <= min_n <= max_n");
  // Raw engine output only: std distributions differ between standard libraries.
  std::mt19937_64 engine(seed);
  auto unit = [&] { return static_cast<double>(engine() >> 11) * 0x1.0p-53; };
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = min_n + engine() % (max_n - min_n + 1);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (unit() < edge_probability) edges.emplace_back(u, v);
      }
    }
    out.emplace_back(n, edges);
  }
  return out;
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::all_connected, Family::trees, Family::stars, Family::cycles,
                   Family::completes, Family::paths, Family::files}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::all_connected: return "all-connected";
    case Family::trees: return "trees";
    case Family::stars: return "stars";
    case Family::cycles: return "cycles";
    case Family::completes: return "completes";
    case Family::paths: return "paths";
    case Family::files: return "files";
  }
  return "unknown";
}

std::vector<CorpusGraph> generate_corpus(Family family, std::size_t min_n, std::size_t max_n,
                                         const std::vector<std::filesystem::path>& files) {
  std::vector<CorpusGraph> out;
  switch (family) {
    case Family::all_connected:
    case Family::trees:
      for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n) {
        const auto graphs = family == Family::trees ? trees(n) : connected_graphs(n);
        const std::string stem = family == Family::trees ? "tree" : "conn";
        for (std::size_t i = 0; i < graphs.size(); ++i) {
          out.push_back({stem + std::to_string(n) + "-" + padded(i + 1, 3), graphs[i]});
        }
      }
      break;
    case Family::stars:
      for (std::size_t r = std::max<std::size_t>(min_n, 1); r <= max_n; ++r) {
        out.push_back({"star-r" + std::to_string(r), star_graph(r)});
      }
      break;
    case Family::cycles:
      for (std::size_t n = std::max<std::size_t>(min_n, 3); n <= max_n; ++n) {
        out.push_back({"cycle-" + std::to_string(n), cycle_graph(n)});
      }
      break;
    case Family::completes:
      for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n) {
        out.push_back({"complete-" + std::to_string(n), complete_graph(n)});
      }
      break;
    case Family::paths:
      for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n) {
        out.push_back({"path-" + std::to_string(n), path_graph(n)});
      }
      break;
    case Family::files:
      for (const auto& path : files) {
        out.push_back({path.filename().string(), read_edge_list(path)});
      }
      break;
  }
  return out;
}

}  // namespace gsg
