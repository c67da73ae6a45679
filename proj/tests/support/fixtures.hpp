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

#ifndef GSG_TESTS_SUPPORT_FIXTURES_HPP_
#define GSG_TESTS_SUPPORT_FIXTURES_HPP_

#include "gsg/graph.hpp"
#include "gsg/io.hpp"

namespace gsg::testing {

// The seven-vertex example graph, labels shifted down by one: triangle
// {2,3,4}, pendant 0 on 2, pendant 1 on 3, path 4-5-6.
inline constexpr const char* kExampleGraphText = "7 7\n0 2\n1 3\n2 3\n2 4\n3 4\n4 5\n5 6";

inline Graph example_graph() { return parse_edge_list(kExampleGraphText); }

// Two adjacent centers 0 and 1; leaves 2,3 on 0 and 4,5 on 1.
inline Graph double_star() {
  return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

}  // namespace gsg::testing

#endif  // GSG_TESTS_SUPPORT_FIXTURES_HPP_
