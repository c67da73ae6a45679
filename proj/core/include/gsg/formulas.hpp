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

#ifndef GSG_FORMULAS_HPP_
#define GSG_FORMULAS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsg/budget.hpp"
#include "gsg/graph.hpp"
#include "gsg/sierpinski.hpp"

namespace gsg {

using BigInt = boost::multiprecision::cpp_int;

BigInt power(std::uint64_t base, std::size_t exponent);

struct OrderSize {
  BigInt order;
  BigInt size;
};

// (n^t, m(n^t - 1)/(n - 1)); (1, 0) when n == 1. Requires n >= 1, t >= 1.
OrderSize order_size_formula(std::uint64_t n, std::uint64_t m, std::size_t t);

// eps(T)(n^t - 2n^(t-1) + 1)/(n - 1) leaves of S(T,t). Throws GraphError when
// tree is not a tree. For n == 1 the single vertex is not a leaf: returns 0.
BigInt leaf_count_formula(const Graph& tree, std::size_t t);

// n^(t-1) * value, the scaling shared by the cover and independence formulas.
BigInt beta_formula(std::uint64_t n, std::uint64_t beta, std::size_t t);
BigInt alpha_formula(std::uint64_t n, std::uint64_t alpha, std::size_t t);
BigInt beta_formula(const Graph& g, std::size_t t, const SolverBudget& budget = {});
BigInt alpha_formula(const Graph& g, std::size_t t, const SolverBudget& budget = {});

// n^(t-2) (n*gamma - xi). Throws std::invalid_argument for t < 2.
BigInt domination_upper_bound(std::uint64_t n, std::uint64_t gamma,
                              std::uint64_t xi, std::size_t t);
BigInt domination_upper_bound(const Graph& g, std::size_t t,
                              const SolverBudget& budget = {});

// colors'(wx) = colors(x), indexed by word code. Throws std::invalid_argument
// if the base coloring is not proper.
std::vector<std::uint32_t> lift_coloring(const Graph& base,
                                         std::span<const std::uint32_t> colors,
                                         std::size_t t,
                                         const BuildOptions& options = {});

// {wv : v in cover, w in V^(t-1)}. Throws std::invalid_argument if cover does
// not cover base.
VertexSet lift_cover(const Graph& base, const VertexSet& cover, std::size_t t,
                     const BuildOptions& options = {});

// D_{t-1} - D_{t-2} with D_{t-1} = {wx : x in d} and
// D_{t-2} = {w'uu : u in core}. Requires d dominating, core a subset of d whose
// induced subgraph has no isolated vertex, t >= 2; throws std::invalid_argument
// otherwise. Size is n^(t-1)|d| - n^(t-2)|core|.
VertexSet domination_witness(const Graph& base, const VertexSet& d,
                             const VertexSet& core, std::size_t t,
                             const BuildOptions& options = {});

// One formula evaluation for a base graph at depth t.
struct FormulaReport {
  std::string parameter;
  std::string base_value;
  std::size_t t = 1;
  std::optional<BigInt> formula;
  std::vector<std::string> flags;

  // "parameter=<p> t=<t> base=<v> formula=<f> flags=<a,b>"
  std::string to_text() const;
  // One "key=value" per line, keys prefixed by the parameter name.
  std::string to_key_values() const;
};

// Formula predictions for order, size, leaves, chi, omega, beta, alpha and the
// domination bound. Preconditions that fail leave formula empty and set a flag.
std::vector<FormulaReport> formula_reports(const Graph& g, std::size_t t,
                                           const SolverBudget& budget = {});

}  // namespace gsg

#endif  // GSG_FORMULAS_HPP_
