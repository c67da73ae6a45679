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

#include "gsg/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>

namespace gsg {
namespace {

// Parses "<a> <b>" exactly: two decimal numbers separated by one space.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  auto space = line.find(' ');
  if (space == std::string_view::npos || space == 0 || space + 1 >= line.size()) {
    return false;
  }
  auto parse = [](std::string_view s, std::uint64_t& out) {
    if (s.empty() || s.front() < '0' || s.front() > '9') return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  return parse(line.substr(0, space), a) && parse(line.substr(space + 1), b);
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      if (pos >= text.size()) break;  // trailing newline
      throw ParseError(line_no, "blank line");
    }

    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_pair(line, a, b)) {
      throw ParseError(line_no, have_header ? "expected \"u v\"" : "malformed header, expected \"n m\"");
    }
    if (!have_header) {
      if (a == 0) throw ParseError(line_no, "graph must have at least one vertex");
      if (a > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      edges.reserve(std::min<std::uint64_t>(m, 1u << 20));
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(line_no, "more edge lines than the declared " + std::to_string(m));
    }
    if (a >= n || b >= n) {
      throw ParseError(line_no, "vertex index out of range 0.." + std::to_string(n - 1));
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    edges.push_back(e);
  }

  if (!have_header) throw ParseError(line_no, "missing header \"n m\"");
  if (edges.size() != m) {
    throw ParseError(line_no, "declared " + std::to_string(m) + " edges but found " +
                                  std::to_string(edges.size()));
  }
  return Graph(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list(std::ostream& out, const Graph& g,
                     std::optional<std::string_view> comment) {
  if (comment) out << "# " << *comment << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string to_edge_list(const Graph& g, std::optional<std::string_view> comment) {
  std::ostringstream out;
  write_edge_list(out, g, comment);
  return out.str();
}

std::string export_dot(const Graph& g, bool one_indexed) {
  std::ostringstream out;
  const Vertex shift = one_indexed ? 1 : 0;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [label=\"" << v + shift << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace gsg
