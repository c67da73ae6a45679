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

#ifndef GSG_VERTEX_SET_HPP_
#define GSG_VERTEX_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace gsg {

using Vertex = std::uint32_t;

// A subset of the vertices 0..universe-1 of some host graph.
//
// Binary set operations require both operands to share the same universe and
// throw std::invalid_argument otherwise. Element access outside the universe
// throws std::out_of_range.
class VertexSet {
 public:
  static constexpr std::size_t npos = boost::dynamic_bitset<std::uint64_t>::npos;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }

  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  void clear() { bits_.reset(); }

  // Iteration in increasing vertex order; npos when exhausted.
  std::size_t first() const { return bits_.find_first(); }
  std::size_t next(std::size_t v) const { return bits_.find_next(v); }

  template <typename F>
  void for_each(F&& f) const {
    for (auto v = bits_.find_first(); v != npos; v = bits_.find_next(v)) {
      f(static_cast<Vertex>(v));
    }
  }

  std::vector<Vertex> to_vector() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  std::size_t intersection_size(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

  // Lexicographic order of the sorted member lists; sets of different
  // universes compare by universe first.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

 private:
  void check_same_universe(const VertexSet& other) const;

  boost::dynamic_bitset<std::uint64_t> bits_;
};

}  // namespace gsg

#endif  // GSG_VERTEX_SET_HPP_
