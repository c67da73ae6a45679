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

#ifndef GSG_CERTIFICATES_HPP_
#define GSG_CERTIFICATES_HPP_

#include <cstddef>
#include <optional>
#include <string_view>

#include "gsg/budget.hpp"
#include "gsg/formulas.hpp"
#include "gsg/graph.hpp"
#include "gsg/sierpinski.hpp"

namespace gsg {

enum class Status {
  match,
  mismatch,
  bound_holds,
  untested,
  not_applicable,
};

std::string_view to_string(Status s);

// Domination equality certificate: a unique gamma-set together with
// gamma == beta predicts gamma(S(g,t)) == n^(t-2)(n*gamma - xi).
struct EqualityCertificate {
  std::size_t gamma = 0;
  std::size_t beta = 0;
  std::size_t xi = 0;
  std::size_t gamma_set_count = 0;
  BigInt bound;
  bool witness_valid = false;
  std::optional<std::size_t> exact;
  Status status = Status::untested;

  bool unique_gamma_set() const { return gamma_set_count == 1; }
  bool gamma_equals_beta() const { return gamma == beta; }
  bool hypotheses_hold() const { return unique_gamma_set() && gamma_equals_beta(); }
};

// status: not_applicable when the hypotheses fail; match/mismatch when the
// exact domination number of S(g,t) was computed; bound_holds when only the
// witness could be checked; untested when S(g,t) exceeds the vertex budget.
// Throws std::invalid_argument for t < 2 and ResourceError if the base graph
// itself cannot be solved.
EqualityCertificate equality_certificate(const Graph& g, std::size_t t,
                                         const SolverBudget& budget = {},
                                         const BuildOptions& options = {});

// For gamma == beta and t >= 3:
//   (a) gamma(S(g,t)) == n^(t-1) gamma   <=>   (b) xi == 0 and a unique gamma-set.
struct EquivalenceVerdict {
  std::size_t gamma = 0;
  std::size_t beta = 0;
  std::size_t xi = 0;
  std::size_t gamma_set_count = 0;
  BigInt scaled_gamma;
  std::optional<std::size_t> exact;
  bool a = false;
  bool b = false;
  // match when (a) <=> (b); mismatch on a counterexample; not_applicable when
  // gamma != beta; untested when the exact value is out of budget.
  Status status = Status::untested;
};

EquivalenceVerdict equivalence_check(const Graph& g, std::size_t t,
                                     const SolverBudget& budget = {},
                                     const BuildOptions& options = {});

// Under gamma == beta with a unique gamma-set D, each x in D has at least two
// degree-one neighbors.
struct LemmaVerdict {
  Status status = Status::not_applicable;
  // First vertex of D violating the lemma, when status == mismatch.
  std::optional<Vertex> counterexample;
};

LemmaVerdict support_leaf_lemma_check(const Graph& g, const SolverBudget& budget = {});

}  // namespace gsg

#endif  // GSG_CERTIFICATES_HPP_
