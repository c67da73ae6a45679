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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gsg/io.hpp"
#include "gsg/sierpinski.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run gsierp(const std::string& args) {
  const std::string cmd = std::string(GSIERP_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(GSG_DATA_DIR) + "/" + name; }

std::filesystem::path write_temp(const char* name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST(CliTest, GenDepthOneCopiesTheBase) {
  const auto r = gsierp("gen --in " + data("example7.txt") + " --t 1");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(gsg::parse_edge_list(r.out), gsg::read_edge_list(data("example7.txt")));
}

TEST(CliTest, GenMatchesLibraryBuild) {
  const auto r = gsierp("gen --in " + data("example7.txt") + " --t 2");
  ASSERT_EQ(r.status, 0);
  const auto sg = gsg::build_direct(gsg::read_edge_list(data("example7.txt")), 2);
  EXPECT_EQ(r.out, gsg::to_edge_list(sg));
}

TEST(CliTest, GenDot) {
  const auto p2 = write_temp("gsg_cli_p2.txt", "2 1\n0 1\n");
  const auto r = gsierp("gen --in " + p2.string() + " --t 2 --dot --one-indexed");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("label=\"12\""), std::string::npos);
  EXPECT_NE(r.out.find("1 -- 2;"), std::string::npos);
}

TEST(CliTest, ResourceLimitExitCode) {
  const auto r = gsierp("gen --in " + data("example7.txt") + " --t 8 --vertex-budget 1000");
  EXPECT_EQ(r.status, 3);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(gsierp("gen --t 2").status, 2);
  EXPECT_EQ(gsierp("frobnicate").status, 2);
  EXPECT_EQ(gsierp("gen --in /nonexistent/graph.txt --t 2").status, 2);
  const auto bad = write_temp("gsg_cli_bad.txt", "3 2\n0 1\n1 1\n");
  EXPECT_EQ(gsierp("params --in " + bad.string()).status, 2);
  EXPECT_EQ(gsierp("verify --family nonsense --max-n 3 --t-min 1 --t-max 2").status, 2);
}

TEST(CliTest, GammaSetsOfPathOnTwoVertices) {
  const auto p2 = write_temp("gsg_cli_p2.txt", "2 1\n0 1\n");
  const auto r = gsierp("gamma-sets --in " + p2.string());
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "gamma 1\ncount 2\n0\n1\n");
}

TEST(CliTest, ParamsOfExampleGraph) {
  const auto r = gsierp("params --in " + data("example7.txt"));
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("chi 3\n"), std::string::npos);
  EXPECT_NE(r.out.find("omega 3 {2,3,4}\n"), std::string::npos);
  EXPECT_NE(r.out.find("beta 3 "), std::string::npos);
  EXPECT_NE(r.out.find("alpha 4 "), std::string::npos);
  EXPECT_NE(r.out.find("gamma 3 "), std::string::npos);
  EXPECT_NE(r.out.find("xi 2 "), std::string::npos);
  EXPECT_NE(r.out.find("gamma_sets 7\n"), std::string::npos);
}

TEST(CliTest, VerifyIsByteIdenticalAcrossRuns) {
  const std::string args = "verify --family all-connected --max-n 4 --t-min 1 --t-max 2 --jobs 2";
  const auto a = gsierp(args);
  const auto b = gsierp(args + " --format text");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("totals: scheduled="), std::string::npos);
}

TEST(CliTest, VerifyKeyValueFormat) {
  const auto r = gsierp("verify --family stars --min-n 2 --max-n 3 --t-min 2 --t-max 2 --param stars --format kv");
  ASSERT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("check.0.graph=star-r2\ncheck.0.t=2\ncheck.0.param=stars\ncheck.0.formula=3\n"),
            std::string::npos);
  EXPECT_NE(r.out.find("totals.match=2\n"), std::string::npos);
}

}  // namespace
