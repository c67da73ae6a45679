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

#ifndef GSG_HARNESS_HPP_
#define GSG_HARNESS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsg/budget.hpp"
#include "gsg/certificates.hpp"
#include "gsg/corpus.hpp"
#include "gsg/sierpinski.hpp"

namespace gsg {

enum class Param {
  construction,   // direct and recursive builds agree
  order_size,     // order n^t, size m(n^t-1)/(n-1)
  leaves,         // leaf formula on trees; S(T,t) is a tree
  chromatic,      // chi(S) == chi(G)
  clique,         // omega(S) == omega(G)
  cover,          // beta(S) == n^(t-1) beta(G)
  independence,   // alpha(S) == n^(t-1) alpha(G), alpha + beta == n^t
  domination,     // gamma(S) <= n^(t-2)(n gamma - xi), witness valid
  stars,          // gamma(S(K_{1,r},t)) == (r+1)^(t-1)
  equality,       // equality certificate
  equivalence,    // (a) <=> (b) for gamma == beta, t >= 3
  lemma,          // leaf-support lemma on the base graph
};

std::optional<Param> parse_param(std::string_view name);
std::string_view to_string(Param p);
const std::vector<Param>& all_params();

struct CorpusSpec {
  Family family = Family::all_connected;
  std::size_t min_n = 1;
  std::size_t max_n = 5;
  std::size_t t_min = 1;
  std::size_t t_max = 2;
  std::vector<std::filesystem::path> files;
  SolverBudget budget;
  BuildOptions build{10'000};
  // Exact solvers run only on S(G,t) with at most this many vertices.
  std::size_t solver_vertex_limit = 216;
};

struct CheckRecord {
  std::string graph_id;
  std::size_t t = 1;
  Param param = Param::construction;
  std::string formula_value;
  std::string oracle_value;
  bool witness_valid = false;
  Status status = Status::untested;
  double wall_ms = 0.0;
  std::string note;
};

struct VerificationReport {
  std::vector<CheckRecord> records;
  std::size_t scheduled = 0;

  std::size_t count(Status s) const;
  bool has_mismatch() const { return count(Status::mismatch) > 0; }

  // Tabular text, one row per check, then totals. Records must be sorted.
  std::string to_text(bool timing = false) const;
  // "check.<i>.<field>=<value>" lines followed by totals.
  std::string to_key_values(bool timing = false) const;
};

CheckRecord run_check(const CorpusGraph& g, std::size_t t, Param p,
                      const CorpusSpec& spec);

// Runs every (graph, t, param) triple; records come back sorted by
// (graph order in corpus, t, param) regardless of jobs.
VerificationReport run_verification(const CorpusSpec& spec,
                                    const std::vector<Param>& params,
                                    std::size_t jobs = 1);

}  // namespace gsg

#endif  // GSG_HARNESS_HPP_
