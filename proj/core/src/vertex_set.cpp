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

#include "gsg/vertex_set.hpp"

#include <stdexcept>
#include <string>

namespace gsg {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : bits_(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : bits_(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

bool VertexSet::contains(Vertex v) const {
  if (v >= bits_.size()) return false;
  return bits_.test(v);
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of " +
                            std::to_string(bits_.size()));
  }
  bits_.set(v);
}

void VertexSet::erase(Vertex v) {
  if (v >= bits_.size()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of " +
                            std::to_string(bits_.size()));
  }
  bits_.reset(v);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (bits_.size() != other.bits_.size()) {
    throw std::invalid_argument("vertex sets over different universes");
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  return bits_.is_subset_of(other.bits_);
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  return bits_.intersects(other.bits_);
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  check_same_universe(other);
  return (bits_ & other.bits_).count();
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  bits_ |= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  bits_ &= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  bits_ -= other.bits_;
  return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe()) return a.universe() < b.universe();
  auto x = a.first();
  auto y = b.first();
  while (x != VertexSet::npos && y != VertexSet::npos) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x == VertexSet::npos && y != VertexSet::npos;
}

}  // namespace gsg
