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

#ifndef GSG_IO_HPP_
#define GSG_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "gsg/graph.hpp"

namespace gsg {

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Edge-list format: '#' lines are comments; the first other line is "n m";
// then exactly m lines "u v" (ASCII decimal, one space, 0 <= u,v < n).
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

// Writes the edge-list format. An optional comment is emitted as "# <comment>"
// before the header.
void write_edge_list(std::ostream& out, const Graph& g,
                     std::optional<std::string_view> comment = std::nullopt);
std::string to_edge_list(const Graph& g,
                         std::optional<std::string_view> comment = std::nullopt);

// Undirected DOT. Labels default to the vertex index (shifted by one when
// one_indexed is set).
std::string export_dot(const Graph& g, bool one_indexed = false);

}  // namespace gsg

#endif  // GSG_IO_HPP_
