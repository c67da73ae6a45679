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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gsg/corpus.hpp"
#include "gsg/sierpinski.hpp"

namespace gsg {
namespace {

TEST(ParseEdgeListTest, SevenVertexExample) {
  const Graph g = testing::example_graph();
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.size(), 7u);
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_TRUE(g.adjacent(5, 6));
  EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(ParseEdgeListTest, SmallGraphs) {
  const Graph k1 = parse_edge_list("1 0\n");
  EXPECT_EQ(k1.order(), 1u);
  EXPECT_EQ(k1.size(), 0u);
  EXPECT_EQ(parse_edge_list("3 3\n0 1\n1 2\n0 2"), complete_graph(3));
}

TEST(ParseEdgeListTest, CommentsAreSkipped) {
  const Graph g = parse_edge_list("# header comment\n2 1\n# between\n1 0\n");
  EXPECT_EQ(g, path_graph(2));
}

TEST(ParseEdgeListTest, Errors) {
  const char* bad[] = {
      "",                 // no header
      "x 1\n",            // malformed header
      "3\n",              // malformed header
      "0 0\n",            // empty graph
      "2 1\n0 2\n",       // vertex out of range
      "2 1\n1 1\n",       // self-loop
      "3 2\n0 1\n1 0\n",  // duplicate edge
      "3 2\n0 1\n",       // fewer edges than declared
      "3 1\n0 1\n1 2\n",  // more edges than declared
      "3 1\n0  1\n",      // two spaces
      "3 1\n0\t1\n",      // tab
      "3 1\n 0 1\n",      // leading space
      "3 1\n-0 1\n",      // sign
      "3 2\n0 1\n\n1 2\n",  // blank line inside
  };
  for (const char* text : bad) {
    EXPECT_THROW(parse_edge_list(text), ParseError) << '"' << text << '"';
  }
}

TEST(ParseEdgeListTest, ErrorCarriesLineNumber) {
  try {
    parse_edge_list("# c\n3 2\n0 1\n0 7\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}

TEST(EdgeListRoundTrip, ParseExportParseIsIdentity) {
  for (const Graph& g : random_graphs(100, 1, 12, 0.4, 11)) {
    const std::string once = to_edge_list(g);
    const Graph back = parse_edge_list(once);
    EXPECT_EQ(back, g);
    EXPECT_EQ(to_edge_list(back), once);
  }
}

TEST(ExportDotTest, TinyGraphs) {
  EXPECT_EQ(export_dot(Graph(1, {})), "graph G {\n  0 [label=\"0\"];\n}\n");
  EXPECT_EQ(export_dot(path_graph(2), true),
            "graph G {\n  0 [label=\"1\"];\n  1 [label=\"2\"];\n  0 -- 1;\n}\n");
}

TEST(ExportDotTest, SierpinskiPathUsesWordLabels) {
  const auto sg = build_direct(path_graph(2), 2);
  EXPECT_EQ(export_dot(sg, true),
            "graph S {\n"
            "  0 [label=\"11\"];\n"
            "  1 [label=\"12\"];\n"
            "  2 [label=\"21\"];\n"
            "  3 [label=\"22\"];\n"
            "  0 -- 1;\n"
            "  1 -- 2;\n"
            "  2 -- 3;\n"
            "}\n");
}

TEST(SierpinskiEdgeListTest, HeaderComment) {
  const auto sg = build_direct(complete_graph(3), 2);
  const std::string text = to_edge_list(sg);
  EXPECT_EQ(text.rfind("# sierpinski base_n=3 t=2\n9 12\n", 0), 0u);
  EXPECT_EQ(parse_edge_list(text), sg.graph());
}

}  // namespace
}  // namespace gsg
