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

// gsierp: build generalized Sierpinski graphs, compute base-graph parameters
// and run formula-versus-solver verification campaigns.
//
// Exit codes: 0 success (no mismatch), 1 a verification mismatch, 2 usage or
// input error, 3 resource limit reached outside a verification run.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gsg/certificates.hpp"
#include "gsg/formulas.hpp"
#include "gsg/harness.hpp"
#include "gsg/io.hpp"
#include "gsg/sierpinski.hpp"
#include "gsg/solvers.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kResourceError = 3;

std::string format_set(const gsg::VertexSet& s, bool one_indexed) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](gsg::Vertex v) {
    if (!first) out += ",";
    out += std::to_string(v + (one_indexed ? 1 : 0));
    first = false;
  });
  return out + "}";
}

gsg::SolverBudget make_budget(double seconds, std::uint64_t nodes) {
  gsg::SolverBudget b;
  b.time_limit = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  b.node_limit = nodes;
  return b;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gsg::GraphError("cannot write " + path);
  out << text;
}

struct GenOptions {
  std::string in;
  std::size_t t = 1;
  bool dot = false;
  std::string out;
  bool one_indexed = false;
  std::uint64_t vertex_budget = 1'000'000;
};

int run_gen(const GenOptions& o) {
  const auto base = gsg::read_edge_list(o.in);
  const auto sg = gsg::build_direct(base, o.t, {o.vertex_budget});
  write_output(o.out, o.dot ? gsg::export_dot(sg, o.one_indexed) : gsg::to_edge_list(sg));
  return 0;
}

struct ParamsOptions {
  std::string in;
  double budget_seconds = 300;
  std::uint64_t node_limit = 1'000'000'000;
  bool one_indexed = false;
  std::size_t t = 0;
};

int run_params(const ParamsOptions& o) {
  const auto g = gsg::read_edge_list(o.in);
  const auto budget = make_budget(o.budget_seconds, o.node_limit);
  const bool one = o.one_indexed;

  const auto chi = gsg::chromatic_number(g, budget);
  const auto omega = gsg::clique_number(g, budget);
  const auto beta = gsg::vertex_cover_number(g, budget);
  const auto alpha = gsg::independence_number(g, budget);
  const auto family = gsg::enumerate_gamma_sets(g, budget);
  const auto x = gsg::xi(g, family);
  const auto sup = gsg::supports(g);

  std::cout << "n " << g.order() << '\n'
            << "m " << g.size() << '\n'
            << "chi " << chi.value << '\n'
            << "omega " << omega.value << " " << format_set(omega.witness, one) << '\n'
            << "beta " << beta.value << " " << format_set(beta.witness, one) << '\n'
            << "alpha " << alpha.value << " " << format_set(alpha.witness, one) << '\n'
            << "gamma " << family.gamma << " " << format_set(family.sets.front(), one) << '\n'
            << "xi " << x.value << " " << format_set(x.dominating_set, one) << " core "
            << format_set(x.core, one) << '\n'
            << "gamma_sets " << family.sets.size() << '\n'
            << "leaves " << format_set(gsg::leaves(g), one) << '\n'
            << "supports";
  sup.supports.for_each([&](gsg::Vertex v) {
    std::cout << " " << v + (one ? 1 : 0) << ":" << sup.leaf_count[v];
  });
  std::cout << '\n' << "tree " << (gsg::is_tree(g) ? "yes" : "no") << '\n';
  std::cout << "coloring";
  for (auto c : chi.colors) std::cout << ' ' << c;
  std::cout << '\n';

  if (o.t > 0) {
    for (const auto& report : gsg::formula_reports(g, o.t, budget)) {
      std::cout << report.to_text() << '\n';
    }
  }
  return 0;
}

struct VerifyOptions {
  std::string family = "all-connected";
  std::size_t min_n = 1;
  std::size_t max_n = 5;
  std::size_t t_min = 1;
  std::size_t t_max = 2;
  std::vector<std::string> params;
  std::vector<std::string> files;
  double budget_seconds = 300;
  std::uint64_t node_limit = 1'000'000'000;
  std::uint64_t vertex_budget = 10'000;
  std::size_t solver_vertex_limit = 216;
  std::size_t jobs = 1;
  std::string format = "text";
  std::string out;
  bool timing = false;
};

int run_verify(const VerifyOptions& o) {
  gsg::CorpusSpec spec;
  auto family = gsg::parse_family(o.family);
  if (!family) {
    std::cerr << "unknown family: " << o.family << '\n';
    return kUsageError;
  }
  if (o.t_min == 0 || o.t_min > o.t_max) {
    std::cerr << "need 1 <= t-min <= t-max\n";
    return kUsageError;
  }
  spec.family = *family;
  spec.min_n = o.min_n;
  spec.max_n = o.max_n;
  spec.t_min = o.t_min;
  spec.t_max = o.t_max;
  for (const auto& f : o.files) spec.files.emplace_back(f);
  spec.budget = make_budget(o.budget_seconds, o.node_limit);
  spec.build.vertex_budget = o.vertex_budget;
  spec.solver_vertex_limit = o.solver_vertex_limit;

  std::vector<gsg::Param> params;
  for (const auto& name : o.params) {
    auto p = gsg::parse_param(name);
    if (!p) {
      std::cerr << "unknown parameter: " << name << '\n';
      return kUsageError;
    }
    params.push_back(*p);
  }
  if (params.empty()) params = gsg::all_params();

  const auto report = gsg::run_verification(spec, params, o.jobs);
  write_output(o.out, o.format == "kv" ? report.to_key_values(o.timing) : report.to_text(o.timing));
  return report.has_mismatch() ? 1 : 0;
}

struct GammaOptions {
  std::string in;
  bool one_indexed = false;
  double budget_seconds = 300;
};

int run_gamma_sets(const GammaOptions& o) {
  const auto g = gsg::read_edge_list(o.in);
  const auto family = gsg::enumerate_gamma_sets(g, make_budget(o.budget_seconds, 1'000'000'000));
  std::cout << "gamma " << family.gamma << '\n' << "count " << family.sets.size() << '\n';
  for (const auto& s : family.sets) {
    bool first = true;
    s.for_each([&](gsg::Vertex v) {
      std::cout << (first ? "" : " ") << v + (o.one_indexed ? 1 : 0);
      first = false;
    });
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Sierpinski graphs: construction, invariants, verification"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Build S(G,t) and write it as an edge list or DOT");
  gen_cmd->add_option("--in", gen.in, "Base graph edge-list file")->required();
  gen_cmd->add_option("--t", gen.t, "Depth t >= 1")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--dot", gen.dot, "Write DOT instead of an edge list");
  gen_cmd->add_option("--out", gen.out, "Output path (default stdout)");
  gen_cmd->add_flag("--one-indexed", gen.one_indexed, "Label word letters from 1");
  gen_cmd->add_option("--vertex-budget", gen.vertex_budget, "Refuse S(G,t) above this order");

  ParamsOptions params;
  auto* params_cmd = app.add_subcommand("params", "Exact parameters of a base graph");
  params_cmd->add_option("--in", params.in, "Graph edge-list file")->required();
  params_cmd->add_option("--budget-seconds", params.budget_seconds, "Per-solver time limit");
  params_cmd->add_option("--node-limit", params.node_limit, "Per-solver search node limit");
  params_cmd->add_flag("--one-indexed", params.one_indexed, "Print vertices from 1");
  params_cmd->add_option("--t", params.t, "Also print formula predictions for S(G,t)");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run formula-versus-solver checks over a corpus");
  verify_cmd->add_option("--family", verify.family,
                         "all-connected, trees, stars, cycles, completes, paths or files");
  verify_cmd->add_option("--min-n", verify.min_n, "Smallest member (r for stars)");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest member (r for stars)")->required();
  verify_cmd->add_option("--t-min", verify.t_min, "Smallest depth")->required();
  verify_cmd->add_option("--t-max", verify.t_max, "Largest depth")->required();
  verify_cmd->add_option("--param", verify.params, "Checks to run (default all)");
  verify_cmd->add_option("--file", verify.files, "Graph files for --family files");
  verify_cmd->add_option("--budget-seconds", verify.budget_seconds, "Per-solve time limit");
  verify_cmd->add_option("--node-limit", verify.node_limit, "Per-solve node limit");
  verify_cmd->add_option("--vertex-budget", verify.vertex_budget, "Largest S(G,t) to build");
  verify_cmd->add_option("--solver-vertex-limit", verify.solver_vertex_limit,
                         "Largest S(G,t) handed to exact solvers");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads");
  verify_cmd->add_option("--format", verify.format, "text or kv")
      ->check(CLI::IsMember({"text", "kv"}));
  verify_cmd->add_option("--out", verify.out, "Report path (default stdout)");
  verify_cmd->add_flag("--timing", verify.timing, "Include wall times (breaks byte-identity)");

  GammaOptions gamma;
  auto* gamma_cmd = app.add_subcommand("gamma-sets", "List every minimum dominating set");
  gamma_cmd->add_option("--in", gamma.in, "Graph edge-list file")->required();
  gamma_cmd->add_flag("--one-indexed", gamma.one_indexed, "Print vertices from 1");
  gamma_cmd->add_option("--budget-seconds", gamma.budget_seconds, "Time limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*params_cmd) return run_params(params);
    if (*verify_cmd) return run_verify(verify);
    if (*gamma_cmd) return run_gamma_sets(gamma);
  } catch (const gsg::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
