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

#include "gsg/formulas.hpp"

#include <sstream>
#include <stdexcept>

#include "gsg/solvers.hpp"
#include "gsg/validate.hpp"

namespace gsg {
namespace {

BigInt exact_quotient(const BigInt& numerator, const BigInt& denominator, const char* what) {
  if (numerator % denominator != 0) {
    throw std::logic_error(std::string("inexact division in ") + what);
  }
  return numerator / denominator;
}

void require_depth(std::size_t t) {
  if (t == 0) throw std::invalid_argument("depth t must be at least 1");
}

}  // namespace

BigInt power(std::uint64_t base, std::size_t exponent) {
  BigInt out = 1;
  for (std::size_t k = 0; k < exponent; ++k) out *= base;
  return out;
}

OrderSize order_size_formula(std::uint64_t n, std::uint64_t m, std::size_t t) {
  if (n == 0) throw std::invalid_argument("order n must be at least 1");
  require_depth(t);
  if (n == 1) return {1, 0};
  BigInt order = power(n, t);
  BigInt size = exact_quotient(BigInt(m) * (order - 1), BigInt(n - 1), "size formula");
  return {std::move(order), std::move(size)};
}

BigInt leaf_count_formula(const Graph& tree, std::size_t t) {
  if (!is_tree(tree)) throw GraphError("leaf count formula requires a tree");
  require_depth(t);
  const std::uint64_t n = tree.order();
  if (n == 1) return 0;
  const BigInt eps = leaves(tree).size();
  const BigInt numerator = eps * (power(n, t) - 2 * power(n, t - 1) + 1);
  return exact_quotient(numerator, BigInt(n - 1), "leaf count formula");
}

BigInt beta_formula(std::uint64_t n, std::uint64_t beta, std::size_t t) {
  require_depth(t);
  return power(n, t - 1) * beta;
}

BigInt alpha_formula(std::uint64_t n, std::uint64_t alpha, std::size_t t) {
  require_depth(t);
  return power(n, t - 1) * alpha;
}

BigInt beta_formula(const Graph& g, std::size_t t, const SolverBudget& budget) {
  return beta_formula(g.order(), vertex_cover_number(g, budget).value, t);
}

BigInt alpha_formula(const Graph& g, std::size_t t, const SolverBudget& budget) {
  return alpha_formula(g.order(), independence_number(g, budget).value, t);
}

BigInt domination_upper_bound(std::uint64_t n, std::uint64_t gamma, std::uint64_t xi,
                              std::size_t t) {
  if (t < 2) throw std::invalid_argument("domination bound requires t >= 2");
  if (xi > gamma) throw std::invalid_argument("xi cannot exceed gamma");
  return power(n, t - 2) * (BigInt(n) * gamma - xi);
}

BigInt domination_upper_bound(const Graph& g, std::size_t t, const SolverBudget& budget) {
  const auto family = enumerate_gamma_sets(g, budget);
  return domination_upper_bound(g.order(), family.gamma, xi(g, family).value, t);
}

std::vector<std::uint32_t> lift_coloring(const Graph& base, std::span<const std::uint32_t> colors,
                                         std::size_t t, const BuildOptions& options) {
  if (!is_proper_coloring(base, colors)) {
    throw std::invalid_argument("base coloring is not proper");
  }
  const std::size_t n = base.order();
  const std::uint64_t order = checked_order(n, t, options);
  std::vector<std::uint32_t> out(order);
  for (WordCode code = 0; code < order; ++code) out[code] = colors[code % n];
  return out;
}

VertexSet lift_cover(const Graph& base, const VertexSet& cover, std::size_t t,
                     const BuildOptions& options) {
  if (!is_vertex_cover(base, cover)) throw std::invalid_argument("set does not cover the base graph");
  const std::size_t n = base.order();
  const std::uint64_t order = checked_order(n, t, options);
  VertexSet out(order);
  for (WordCode code = 0; code < order; ++code) {
    if (cover.contains(static_cast<Vertex>(code % n))) out.insert(static_cast<Vertex>(code));
  }
  return out;
}

VertexSet domination_witness(const Graph& base, const VertexSet& d, const VertexSet& core,
                             std::size_t t, const BuildOptions& options) {
  if (t < 2) throw std::invalid_argument("domination witness requires t >= 2");
  if (!is_dominating_set(base, d)) throw std::invalid_argument("set does not dominate the base graph");
  if (core.universe() != base.order() || !core.is_subset_of(d)) {
    throw std::invalid_argument("core must be a subset of the dominating set");
  }
  if (induced_isolated_count(base, core) != 0) {
    throw std::invalid_argument("core induces an isolated vertex");
  }
  const std::size_t n = base.order();
  const std::uint64_t order = checked_order(n, t, options);

  VertexSet out(order);
  for (WordCode code = 0; code < order; ++code) {
    if (d.contains(static_cast<Vertex>(code % n))) out.insert(static_cast<Vertex>(code));
  }
  // Remove w'uu for u in the core.
  const WordCode prefixes = order / (n * n);
  for (WordCode w = 0; w < prefixes; ++w) {
    core.for_each([&](Vertex u) { out.erase(static_cast<Vertex>(w * n * n + u * n + u)); });
  }
  return out;
}

std::string FormulaReport::to_text() const {
  std::ostringstream out;
  out << "parameter=" << parameter << " t=" << t << " base=" << base_value << " formula=";
  if (formula) {
    out << *formula;
  } else {
    out << "-";
  }
  out << " flags=";
  for (std::size_t i = 0; i < flags.size(); ++i) out << (i ? "," : "") << flags[i];
  return out.str();
}

std::string FormulaReport::to_key_values() const {
  std::ostringstream out;
  out << parameter << ".t=" << t << '\n';
  out << parameter << ".base=" << base_value << '\n';
  out << parameter << ".formula=";
  if (formula) out << *formula;
  out << '\n' << parameter << ".flags=";
  for (std::size_t i = 0; i < flags.size(); ++i) out << (i ? "," : "") << flags[i];
  out << '\n';
  return out.str();
}

std::vector<FormulaReport> formula_reports(const Graph& g, std::size_t t,
                                           const SolverBudget& budget) {
  require_depth(t);
  const std::uint64_t n = g.order();
  std::vector<FormulaReport> out;
  const auto os = order_size_formula(n, g.size(), t);
  out.push_back({"order", std::to_string(n), t, os.order, {}});
  out.push_back({"size", std::to_string(g.size()), t, os.size, {}});

  FormulaReport leaf{"leaves", std::to_string(leaves(g).size()), t, std::nullopt, {}};
  if (is_tree(g)) {
    leaf.formula = leaf_count_formula(g, t);
  } else {
    leaf.flags.push_back("requires-tree");
  }
  out.push_back(std::move(leaf));

  const auto chi = chromatic_number(g, budget).value;
  out.push_back({"chi", std::to_string(chi), t, BigInt(chi), {}});
  const auto omega = clique_number(g, budget).value;
  out.push_back({"omega", std::to_string(omega), t, BigInt(omega), {}});
  const auto beta = vertex_cover_number(g, budget).value;
  out.push_back({"beta", std::to_string(beta), t, beta_formula(n, beta, t), {}});
  out.push_back({"alpha", std::to_string(n - beta), t, alpha_formula(n, n - beta, t), {}});

  const auto family = enumerate_gamma_sets(g, budget);
  const auto x = xi(g, family).value;
  FormulaReport dom{"gamma_bound", std::to_string(family.gamma), t, std::nullopt,
                    {"xi=" + std::to_string(x)}};
  if (t >= 2) {
    dom.formula = domination_upper_bound(n, family.gamma, x, t);
  } else {
    dom.flags.push_back("requires-t>=2");
  }
  out.push_back(std::move(dom));
  return out;
}

}  // namespace gsg
