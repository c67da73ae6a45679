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

#ifndef GSG_SIERPINSKI_HPP_
#define GSG_SIERPINSKI_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gsg/graph.hpp"

namespace gsg {

// Integer code of a word: big-endian base-n value of its letters.
using WordCode = std::uint64_t;

// A word u_1 u_2 ... u_t over the vertex alphabet of a base graph.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Vertex> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Vertex> letters) : letters_(letters) {}

  static Word decode(WordCode code, std::size_t n, std::size_t t);
  // Throws std::invalid_argument if a letter is >= n.
  WordCode encode(std::size_t n) const;

  std::size_t length() const { return letters_.size(); }
  Vertex operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Vertex>& letters() const { return letters_; }

  // Word with letter x appended.
  Word append(Vertex x) const;

  // Concatenated letters; joined by '.' once a letter may need two digits.
  std::string label(std::size_t n, bool one_indexed = false) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Vertex> letters_;
};

struct BuildOptions {
  std::uint64_t vertex_budget = 1'000'000;
};

// Materialized S(G,t). Vertex k of graph() is the word with code k.
class SierpinskiGraph {
 public:
  SierpinskiGraph(Graph base, std::size_t depth, Graph graph);

  const Graph& base() const { return base_; }
  std::size_t depth() const { return depth_; }
  const Graph& graph() const { return graph_; }

  std::size_t order() const { return graph_.order(); }
  std::size_t size() const { return graph_.size(); }

  Word word(WordCode code) const { return Word::decode(code, base_.order(), depth_); }
  WordCode code(const Word& w) const;

 private:
  Graph base_;
  std::size_t depth_;
  Graph graph_;
};

// True iff some position i has equal prefixes before i, an edge {u_i,v_i} of
// base at i, and swapped constant suffixes (u_j = v_i, v_j = u_i) after i.
// Throws std::invalid_argument on length mismatch or letters outside base.
bool edge_rule(const Graph& base, const Word& u, const Word& v);

// n^t, or throws ResourceError when it exceeds the vertex budget.
std::uint64_t checked_order(std::size_t n, std::size_t t, const BuildOptions& options);

// Both builders throw std::invalid_argument for t == 0 and ResourceError when
// n^t exceeds options.vertex_budget. They yield identical edge lists.
SierpinskiGraph build_direct(const Graph& base, std::size_t t,
                             const BuildOptions& options = {});
SierpinskiGraph build_recursive(const Graph& base, std::size_t t,
                                const BuildOptions& options = {});

// The n constant words xx...x in increasing x.
std::vector<Word> extreme_vertices(const SierpinskiGraph& sg);

// For a copy prefix w of length t-1: the unique member of V_w of the form
// w'xx...x, i.e. w followed by its own last letter.
Word copy_extreme(const SierpinskiGraph& sg, const Word& w);

// Neighbors of a word in S(base, t) computed from the edge rule alone, for
// instances too large to materialize. Result is sorted by code.
std::vector<WordCode> implicit_neighbors(const Graph& base, std::size_t t,
                                         WordCode code);

// Labels for every vertex of sg in code order.
std::string export_dot(const SierpinskiGraph& sg, bool one_indexed = false);

// Edge list with the "sierpinski base_n=<n> t=<t>" header comment.
std::string to_edge_list(const SierpinskiGraph& sg);

}  // namespace gsg

#endif  // GSG_SIERPINSKI_HPP_
