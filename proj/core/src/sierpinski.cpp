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

#include "gsg/sierpinski.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "gsg/budget.hpp"
#include "gsg/io.hpp"

namespace gsg {
namespace {

// powers[k] = n^k, k = 0..t. Caller has checked n^t fits.
std::vector<WordCode> powers(std::size_t n, std::size_t t) {
  std::vector<WordCode> out(t + 1, 1);
  for (std::size_t k = 1; k <= t; ++k) out[k] = out[k - 1] * n;
  return out;
}

// repunits[s] = code of the word 11...1 of length s, so y * repunits[s] is y^s.
std::vector<WordCode> repunits(std::size_t n, std::size_t t) {
  std::vector<WordCode> out(t + 1, 0);
  for (std::size_t k = 1; k <= t; ++k) out[k] = out[k - 1] * n + 1;
  return out;
}

void check_letters(const Graph& base, const Word& w) {
  for (Vertex x : w.letters()) {
    if (x >= base.order()) {
      throw std::invalid_argument("letter " + std::to_string(x) + " outside base graph of order " +
                                  std::to_string(base.order()));
    }
  }
}

}  // namespace

Word Word::decode(WordCode code, std::size_t n, std::size_t t) {
  std::vector<Vertex> letters(t, 0);
  for (std::size_t i = t; i-- > 0;) {
    letters[i] = static_cast<Vertex>(code % n);
    code /= n;
  }
  return Word(std::move(letters));
}

WordCode Word::encode(std::size_t n) const {
  WordCode code = 0;
  for (Vertex x : letters_) {
    if (x >= n) throw std::invalid_argument("letter " + std::to_string(x) + " not below " + std::to_string(n));
    code = code * n + x;
  }
  return code;
}

Word Word::append(Vertex x) const {
  auto letters = letters_;
  letters.push_back(x);
  return Word(std::move(letters));
}

std::string Word::label(std::size_t n, bool one_indexed) const {
  const Vertex shift = one_indexed ? 1 : 0;
  const bool single_digit = n + shift <= 10;
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!single_digit && i > 0) out += '.';
    out += std::to_string(letters_[i] + shift);
  }
  return out;
}

SierpinskiGraph::SierpinskiGraph(Graph base, std::size_t depth, Graph graph)
    : base_(std::move(base)), depth_(depth), graph_(std::move(graph)) {}

WordCode SierpinskiGraph::code(const Word& w) const {
  if (w.length() != depth_) throw std::invalid_argument("word length differs from depth");
  return w.encode(base_.order());
}

bool edge_rule(const Graph& base, const Word& u, const Word& v) {
  if (u.length() != v.length()) throw std::invalid_argument("words of different length");
  check_letters(base, u);
  check_letters(base, v);
  const std::size_t t = u.length();
  std::size_t i = 0;
  while (i < t && u[i] == v[i]) ++i;
  if (i == t) return false;
  if (!base.adjacent(u[i], v[i])) return false;
  for (std::size_t j = i + 1; j < t; ++j) {
    if (u[j] != v[i] || v[j] != u[i]) return false;
  }
  return true;
}

std::uint64_t checked_order(std::size_t n, std::size_t t, const BuildOptions& options) {
  if (t == 0) throw std::invalid_argument("depth t must be at least 1");
  const std::uint64_t cap =
      std::min<std::uint64_t>(options.vertex_budget, std::numeric_limits<Vertex>::max());
  std::uint64_t order = 1;
  for (std::size_t k = 0; k < t; ++k) {
    if (n > 1 && order > cap / n) {
      throw ResourceError("S(G,t) with n=" + std::to_string(n) + ", t=" + std::to_string(t) +
                          " exceeds the vertex budget of " + std::to_string(cap));
    }
    order *= n;
  }
  if (order > cap) {
    throw ResourceError("S(G,t) order " + std::to_string(order) + " exceeds the vertex budget of " +
                        std::to_string(cap));
  }
  return order;
}

SierpinskiGraph build_direct(const Graph& base, std::size_t t, const BuildOptions& options) {
  const std::size_t n = base.order();
  const std::uint64_t order = checked_order(n, t, options);
  const auto pw = powers(n, t);
  const auto rep = repunits(n, t);

  // Every edge is {w x y^s, w y x^s} for a prefix w of length t-1-s and a base
  // edge {x, y}.
  std::vector<Edge> edges;
  if (n > 1) edges.reserve(base.size() * ((order - 1) / (n - 1)));
  for (std::size_t s = 0; s < t; ++s) {
    const std::size_t prefixes = pw[t - 1 - s];
    for (WordCode p = 0; p < prefixes; ++p) {
      const WordCode offset = p * pw[s + 1];
      for (auto [x, y] : base.edges()) {
        edges.emplace_back(static_cast<Vertex>(offset + x * pw[s] + y * rep[s]),
                           static_cast<Vertex>(offset + y * pw[s] + x * rep[s]));
      }
    }
  }
  return SierpinskiGraph(base, t, Graph(order, edges));
}

SierpinskiGraph build_recursive(const Graph& base, std::size_t t, const BuildOptions& options) {
  const std::size_t n = base.order();
  const std::uint64_t order = checked_order(n, t, options);
  const auto pw = powers(n, t);
  const auto rep = repunits(n, t);

  std::vector<Edge> edges = base.edges();
  for (std::size_t level = 2; level <= t; ++level) {
    // n copies of S(G, level-1), copy x under prefix x...
    const WordCode block = pw[level - 1];
    std::vector<Edge> next;
    next.reserve(n * edges.size() + base.size());
    for (Vertex x = 0; x < n; ++x) {
      for (auto [a, b] : edges) {
        next.emplace_back(static_cast<Vertex>(x * block + a), static_cast<Vertex>(x * block + b));
      }
    }
    // ...linked by xy...y -- yx...x for each base edge.
    for (auto [x, y] : base.edges()) {
      next.emplace_back(static_cast<Vertex>(x * block + y * rep[level - 1]),
                        static_cast<Vertex>(y * block + x * rep[level - 1]));
    }
    edges = std::move(next);
  }
  return SierpinskiGraph(base, t, Graph(order, edges));
}

std::vector<Word> extreme_vertices(const SierpinskiGraph& sg) {
  std::vector<Word> out;
  for (Vertex x = 0; x < sg.base().order(); ++x) {
    out.emplace_back(std::vector<Vertex>(sg.depth(), x));
  }
  return out;
}

Word copy_extreme(const SierpinskiGraph& sg, const Word& w) {
  if (sg.depth() < 2) throw std::invalid_argument("copies exist only for t >= 2");
  if (w.length() + 1 != sg.depth()) throw std::invalid_argument("copy prefix must have length t-1");
  check_letters(sg.base(), w);
  return w.append(w[w.length() - 1]);
}

std::vector<WordCode> implicit_neighbors(const Graph& base, std::size_t t, WordCode code) {
  const std::size_t n = base.order();
  const Word u = Word::decode(code, n, t);
  if (u.encode(n) != code) throw std::invalid_argument("code outside V^t");
  std::vector<WordCode> out;

  // Differ in the last letter only: neighbors inside the copy.
  const WordCode prefix = code - u[t - 1];
  for (Vertex b : base.neighbors(u[t - 1])) out.push_back(prefix + b);

  // Differ at position i < t: u must end in b^s with s = t - i and the letter
  // before that suffix adjacent to b; at most one such neighbor.
  const Vertex b = u[t - 1];
  std::size_t s = 1;
  while (s < t && u[t - 1 - s] == b) ++s;
  if (s < t) {
    const Vertex a = u[t - 1 - s];
    if (base.adjacent(a, b)) {
      std::vector<Vertex> letters(u.letters().begin(), u.letters().begin() + (t - 1 - s));
      letters.push_back(b);
      letters.insert(letters.end(), s, a);
      out.push_back(Word(std::move(letters)).encode(n));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string export_dot(const SierpinskiGraph& sg, bool one_indexed) {
  std::ostringstream out;
  const std::size_t n = sg.base().order();
  out << "graph S {\n";
  for (Vertex v = 0; v < sg.order(); ++v) {
    out << "  " << v << " [label=\"" << sg.word(v).label(n, one_indexed) << "\"];\n";
  }
  for (auto [u, v] : sg.graph().edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const SierpinskiGraph& sg) {
  return to_edge_list(sg.graph(), "sierpinski base_n=" + std::to_string(sg.base().order()) +
                                      " t=" + std::to_string(sg.depth()));
}

}  // namespace gsg
