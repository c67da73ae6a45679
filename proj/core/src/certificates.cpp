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

#include "gsg/certificates.hpp"

#include <stdexcept>

#include "gsg/solvers.hpp"
#include "gsg/validate.hpp"

namespace gsg {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::match: return "match";
    case Status::mismatch: return "mismatch";
    case Status::bound_holds: return "bound-holds";
    case Status::untested: return "untested";
    case Status::not_applicable: return "not-applicable";
  }
  return "unknown";
}

EqualityCertificate equality_certificate(const Graph& g, std::size_t t, const SolverBudget& budget,
                                         const BuildOptions& options) {
  if (t < 2) throw std::invalid_argument("equality certificate requires t >= 2");
  EqualityCertificate cert;
  const auto family = enumerate_gamma_sets(g, budget);
  const auto x = xi(g, family);
  cert.gamma = family.gamma;
  cert.gamma_set_count = family.sets.size();
  cert.xi = x.value;
  cert.beta = vertex_cover_number(g, budget).value;
  cert.bound = domination_upper_bound(g.order(), cert.gamma, cert.xi, t);
  if (!cert.hypotheses_hold()) {
    cert.status = Status::not_applicable;
    return cert;
  }

  std::optional<SierpinskiGraph> sg;
  try {
    sg.emplace(build_direct(g, t, options));
  } catch (const ResourceError&) {
    cert.status = Status::untested;
    return cert;
  }
  const auto witness = domination_witness(g, x.dominating_set, x.core, t, options);
  cert.witness_valid =
      is_dominating_set(sg->graph(), witness) && BigInt(witness.size()) == cert.bound;
  try {
    cert.exact = domination_number(sg->graph(), budget).value;
  } catch (const ResourceError&) {
    cert.status = cert.witness_valid ? Status::bound_holds : Status::mismatch;
    return cert;
  }
  cert.status = cert.witness_valid && BigInt(*cert.exact) == cert.bound ? Status::match
                                                                         : Status::mismatch;
  return cert;
}

EquivalenceVerdict equivalence_check(const Graph& g, std::size_t t, const SolverBudget& budget,
                                     const BuildOptions& options) {
  if (t < 3) throw std::invalid_argument("equivalence check requires t >= 3");
  EquivalenceVerdict verdict;
  const auto family = enumerate_gamma_sets(g, budget);
  verdict.gamma = family.gamma;
  verdict.gamma_set_count = family.sets.size();
  verdict.xi = xi(g, family).value;
  verdict.beta = vertex_cover_number(g, budget).value;
  verdict.scaled_gamma = power(g.order(), t - 1) * verdict.gamma;
  verdict.b = verdict.xi == 0 && verdict.gamma_set_count == 1;
  if (verdict.gamma != verdict.beta) {
    verdict.status = Status::not_applicable;
    return verdict;
  }
  try {
    const auto sg = build_direct(g, t, options);
    verdict.exact = domination_number(sg.graph(), budget).value;
  } catch (const ResourceError&) {
    verdict.status = Status::untested;
    return verdict;
  }
  verdict.a = BigInt(*verdict.exact) == verdict.scaled_gamma;
  verdict.status = verdict.a == verdict.b ? Status::match : Status::mismatch;
  return verdict;
}

LemmaVerdict support_leaf_lemma_check(const Graph& g, const SolverBudget& budget) {
  const auto family = enumerate_gamma_sets(g, budget);
  if (family.sets.size() != 1 || family.gamma != vertex_cover_number(g, budget).value) {
    return {Status::not_applicable, std::nullopt};
  }
  const auto omega = leaves(g);
  LemmaVerdict verdict{Status::match, std::nullopt};
  family.sets.front().for_each([&](Vertex x) {
    if (verdict.counterexample) return;
    if (g.neighborhood(x).intersection_size(omega) < 2) {
      verdict = {Status::mismatch, x};
    }
  });
  return verdict;
}

}  // namespace gsg
