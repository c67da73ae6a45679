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

#include "gsg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "gsg/formulas.hpp"
#include "gsg/solvers.hpp"
#include "gsg/validate.hpp"

namespace gsg {
namespace {

struct ParamName {
  Param param;
  std::string_view name;
};

constexpr ParamName kParamNames[] = {
    {Param::construction, "construction"}, {Param::order_size, "order-size"},
    {Param::leaves, "leaves"},             {Param::chromatic, "chromatic"},
    {Param::clique, "clique"},             {Param::cover, "cover"},
    {Param::independence, "independence"}, {Param::domination, "domination"},
    {Param::stars, "stars"},               {Param::equality, "equality"},
    {Param::equivalence, "equivalence"},   {Param::lemma, "lemma"},
};

std::string str(const BigInt& v) { return v.str(); }
std::string str(std::size_t v) { return std::to_string(v); }

// K_{1,r}: returns r, or 0 when g is not a star.
std::size_t star_leaves(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || g.size() != n - 1 || g.degree(0) != n - 1) return 0;
  return n - 1;
}

class CheckRunner {
 public:
  CheckRunner(const CorpusGraph& g, std::size_t t, const CorpusSpec& spec, CheckRecord& rec)
      : g_(g.graph), t_(t), spec_(spec), rec_(rec) {}

  void run(Param p) {
    switch (p) {
      case Param::construction: return construction();
      case Param::order_size: return order_size();
      case Param::leaves: return leaf_count();
      case Param::chromatic: return chromatic();
      case Param::clique: return clique();
      case Param::cover: return cover();
      case Param::independence: return independence();
      case Param::domination: return domination();
      case Param::stars: return stars();
      case Param::equality: return equality();
      case Param::equivalence: return equivalence();
      case Param::lemma: return lemma();
    }
  }

 private:
  const SierpinskiGraph& sierpinski() {
    if (!sg_) sg_.emplace(build_direct(g_, t_, spec_.build));
    return *sg_;
  }

  // False (and the record marked untested) when S(G,t) is too large to solve.
  bool solvable() {
    if (sierpinski().order() <= spec_.solver_vertex_limit) return true;
    rec_.status = Status::untested;
    rec_.note = "over solver vertex limit";
    return false;
  }

  void settle(bool equal) { rec_.status = equal && rec_.witness_valid ? Status::match : Status::mismatch; }

  void construction() {
    const auto direct = build_direct(g_, t_, spec_.build);
    const auto recursive = build_recursive(g_, t_, spec_.build);
    const bool same = direct.graph().edges() == recursive.graph().edges();
    rec_.formula_value = str(direct.size());
    rec_.oracle_value = str(recursive.size());
    rec_.witness_valid = true;
    settle(same);
  }

  void order_size() {
    const auto f = order_size_formula(g_.order(), g_.size(), t_);
    const auto& sg = sierpinski();
    rec_.formula_value = str(f.order) + "/" + str(f.size);
    rec_.oracle_value = str(sg.order()) + "/" + str(sg.size());
    rec_.witness_valid = true;
    settle(f.order == sg.order() && f.size == sg.size());
  }

  void leaf_count() {
    if (!is_tree(g_)) {
      rec_.status = Status::not_applicable;
      return;
    }
    const auto f = leaf_count_formula(g_, t_);
    const auto& sg = sierpinski();
    const std::size_t scanned = leaves(sg.graph()).size();
    rec_.formula_value = str(f);
    rec_.oracle_value = str(scanned);
    rec_.witness_valid = is_tree(sg.graph());
    settle(f == scanned);
  }

  void chromatic() {
    const auto base = chromatic_number(g_, spec_.budget);
    rec_.formula_value = str(base.value);
    if (!solvable()) return;
    const auto& sg = sierpinski();
    const auto lifted = lift_coloring(g_, base.colors, t_, spec_.build);
    const auto exact = chromatic_number(sg.graph(), spec_.budget);
    rec_.oracle_value = str(exact.value);
    rec_.witness_valid = is_proper_coloring(sg.graph(), lifted) &&
                         *std::max_element(lifted.begin(), lifted.end()) == base.value &&
                         is_proper_coloring(sg.graph(), exact.colors);
    settle(exact.value == base.value);
  }

  void clique() {
    const auto base = clique_number(g_, spec_.budget);
    rec_.formula_value = str(base.value);
    if (!solvable()) return;
    const auto& sg = sierpinski();
    const auto exact = clique_number(sg.graph(), spec_.budget);
    // The base clique sits inside the copy with prefix 00...0.
    rec_.oracle_value = str(exact.value);
    rec_.witness_valid = is_clique(sg.graph(), exact.witness) &&
                         is_clique(sg.graph(), VertexSet(sg.order(), base.witness.to_vector()));
    settle(exact.value == base.value);
  }

  void cover() {
    const auto base = vertex_cover_number(g_, spec_.budget);
    const auto f = beta_formula(g_.order(), base.value, t_);
    rec_.formula_value = str(f);
    if (!solvable()) return;
    const auto& sg = sierpinski();
    const auto lifted = lift_cover(g_, base.witness, t_, spec_.build);
    const auto exact = vertex_cover_number(sg.graph(), spec_.budget);
    rec_.oracle_value = str(exact.value);
    rec_.witness_valid = is_vertex_cover(sg.graph(), lifted) && f == lifted.size() &&
                         is_vertex_cover(sg.graph(), exact.witness);
    settle(f == exact.value);
  }

  void independence() {
    const auto base_cover = vertex_cover_number(g_, spec_.budget);
    const auto f = alpha_formula(g_.order(), g_.order() - base_cover.value, t_);
    rec_.formula_value = str(f);
    if (!solvable()) return;
    const auto& sg = sierpinski();
    const auto lifted =
        VertexSet::full(sg.order()) - lift_cover(g_, base_cover.witness, t_, spec_.build);
    const auto alpha = independence_number(sg.graph(), spec_.budget);
    const auto beta = vertex_cover_number(sg.graph(), spec_.budget);
    rec_.oracle_value = str(alpha.value);
    rec_.witness_valid = is_independent_set(sg.graph(), lifted) && f == lifted.size() &&
                         is_independent_set(sg.graph(), alpha.witness);
    const bool gallai = alpha.value + beta.value == sg.order();
    if (!gallai) rec_.note = "alpha + beta != n^t";
    settle(f == alpha.value && gallai);
  }

  void domination() {
    if (t_ < 2) {
      rec_.status = Status::not_applicable;
      return;
    }
    const auto family = enumerate_gamma_sets(g_, spec_.budget);
    const auto x = xi(g_, family);
    const auto bound = domination_upper_bound(g_.order(), family.gamma, x.value, t_);
    rec_.formula_value = "<=" + str(bound);
    const auto& sg = sierpinski();
    const auto witness = domination_witness(g_, x.dominating_set, x.core, t_, spec_.build);
    rec_.witness_valid = is_dominating_set(sg.graph(), witness) && bound == witness.size();
    if (!rec_.witness_valid) {
      rec_.status = Status::mismatch;
      rec_.note = "witness D* invalid";
      return;
    }
    rec_.status = Status::bound_holds;
    if (sg.order() > spec_.solver_vertex_limit) {
      rec_.note = "witness only";
      return;
    }
    try {
      const auto exact = domination_number(sg.graph(), spec_.budget).value;
      rec_.oracle_value = str(exact);
      if (bound < exact) {
        rec_.status = Status::mismatch;
      } else if (bound == exact) {
        rec_.note = "tight";
      }
    } catch (const ResourceError& e) {
      rec_.note = std::string("witness only: ") + e.what();
    }
  }

  void stars() {
    const std::size_t r = star_leaves(g_);
    if (r == 0 || t_ < 2) {
      rec_.status = Status::not_applicable;
      return;
    }
    const BigInt f = power(r + 1, t_ - 1);
    rec_.formula_value = str(f);
    const auto& sg = sierpinski();
    const VertexSet center(g_.order(), {0});
    const auto witness = domination_witness(g_, center, VertexSet(g_.order()), t_, spec_.build);
    rec_.witness_valid = is_dominating_set(sg.graph(), witness) && f == witness.size();
    if (sg.order() <= spec_.solver_vertex_limit) {
      try {
        const auto exact = domination_number(sg.graph(), spec_.budget).value;
        rec_.oracle_value = str(exact);
        settle(f == exact);
        return;
      } catch (const ResourceError& e) {
        rec_.note = e.what();
      }
    }
    rec_.status = rec_.witness_valid ? Status::bound_holds : Status::mismatch;
  }

  BuildOptions solver_sized() const {
    return {std::min<std::uint64_t>(spec_.build.vertex_budget, spec_.solver_vertex_limit)};
  }

  void equality() {
    if (t_ < 2) {
      rec_.status = Status::not_applicable;
      return;
    }
    const auto cert = equality_certificate(g_, t_, spec_.budget, solver_sized());
    rec_.formula_value = str(cert.bound);
    rec_.oracle_value = cert.exact ? str(*cert.exact) : "-";
    rec_.witness_valid = cert.witness_valid;
    rec_.status = cert.status;
    rec_.note = "gamma=" + str(cert.gamma) + " beta=" + str(cert.beta) + " xi=" + str(cert.xi) +
                " gamma-sets=" + str(cert.gamma_set_count);
  }

  void equivalence() {
    if (t_ < 3) {
      rec_.status = Status::not_applicable;
      return;
    }
    const auto v = equivalence_check(g_, t_, spec_.budget, solver_sized());
    rec_.formula_value = str(v.scaled_gamma);
    rec_.oracle_value = v.exact ? str(*v.exact) : "-";
    rec_.witness_valid = true;
    rec_.status = v.status;
    rec_.note = std::string("a=") + (v.a ? "1" : "0") + " b=" + (v.b ? "1" : "0") +
                " xi=" + str(v.xi) + " gamma-sets=" + str(v.gamma_set_count);
  }

  void lemma() {
    const auto v = support_leaf_lemma_check(g_, spec_.budget);
    rec_.witness_valid = true;
    rec_.status = v.status;
    if (v.counterexample) rec_.note = "vertex " + str(*v.counterexample);
  }

  const Graph& g_;
  std::size_t t_;
  const CorpusSpec& spec_;
  CheckRecord& rec_;
  std::optional<SierpinskiGraph> sg_;
};

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

std::optional<Param> parse_param(std::string_view name) {
  for (const auto& entry : kParamNames) {
    if (entry.name == name) return entry.param;
  }
  return std::nullopt;
}

std::string_view to_string(Param p) {
  for (const auto& entry : kParamNames) {
    if (entry.param == p) return entry.name;
  }
  return "unknown";
}

const std::vector<Param>& all_params() {
  static const std::vector<Param> params = [] {
    std::vector<Param> out;
    for (const auto& entry : kParamNames) out.push_back(entry.param);
    return out;
  }();
  return params;
}

std::size_t VerificationReport::count(Status s) const {
  return static_cast<std::size_t>(std::count_if(
      records.begin(), records.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

std::string VerificationReport::to_text(bool timing) const {
  std::ostringstream out;
  out << pad("graph", 16) << pad("t", 4) << pad("param", 14) << pad("formula", 14)
      << pad("oracle", 14) << pad("witness", 9) << pad("status", 16);
  if (timing) out << pad("ms", 12);
  out << "note\n";
  for (const auto& r : records) {
    out << pad(r.graph_id, 16) << pad(std::to_string(r.t), 4) << pad(std::string(to_string(r.param)), 14)
        << pad(r.formula_value.empty() ? "-" : r.formula_value, 14)
        << pad(r.oracle_value.empty() ? "-" : r.oracle_value, 14)
        << pad(r.witness_valid ? "ok" : "-", 9) << pad(std::string(to_string(r.status)), 16);
    if (timing) out << pad(format_ms(r.wall_ms), 12);
    out << r.note << '\n';
  }
  out << "totals: scheduled=" << scheduled << " match=" << count(Status::match)
      << " mismatch=" << count(Status::mismatch) << " bound-holds=" << count(Status::bound_holds)
      << " untested=" << count(Status::untested)
      << " not-applicable=" << count(Status::not_applicable) << '\n';
  return out.str();
}

std::string VerificationReport::to_key_values(bool timing) const {
  std::ostringstream out;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const std::string key = "check." + std::to_string(i) + ".";
    out << key << "graph=" << r.graph_id << '\n'
        << key << "t=" << r.t << '\n'
        << key << "param=" << to_string(r.param) << '\n'
        << key << "formula=" << r.formula_value << '\n'
        << key << "oracle=" << r.oracle_value << '\n'
        << key << "witness_valid=" << (r.witness_valid ? 1 : 0) << '\n'
        << key << "status=" << to_string(r.status) << '\n'
        << key << "note=" << r.note << '\n';
    if (timing) out << key << "wall_ms=" << format_ms(r.wall_ms) << '\n';
  }
  out << "totals.scheduled=" << scheduled << '\n'
      << "totals.match=" << count(Status::match) << '\n'
      << "totals.mismatch=" << count(Status::mismatch) << '\n'
      << "totals.bound_holds=" << count(Status::bound_holds) << '\n'
      << "totals.untested=" << count(Status::untested) << '\n'
      << "totals.not_applicable=" << count(Status::not_applicable) << '\n';
  return out.str();
}

CheckRecord run_check(const CorpusGraph& g, std::size_t t, Param p, const CorpusSpec& spec) {
  CheckRecord rec;
  rec.graph_id = g.id;
  rec.t = t;
  rec.param = p;
  const auto start = std::chrono::steady_clock::now();
  try {
    CheckRunner(g, t, spec, rec).run(p);
  } catch (const ResourceError& e) {
    rec.status = Status::untested;
    rec.note = std::string("resource: ") + e.what();
  }
  rec.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

VerificationReport run_verification(const CorpusSpec& spec, const std::vector<Param>& params,
                                    std::size_t jobs) {
  const auto corpus = generate_corpus(spec.family, spec.min_n, spec.max_n, spec.files);
  struct Task {
    std::size_t graph;
    std::size_t t;
    Param param;
  };
  std::vector<Task> tasks;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    for (std::size_t t = spec.t_min; t <= spec.t_max; ++t) {
      for (Param p : params) {
        // The lemma concerns the base graph only.
        if (p == Param::lemma && t != spec.t_min) continue;
        tasks.push_back({gi, t, p});
      }
    }
  }

  VerificationReport report;
  report.scheduled = tasks.size();
  report.records.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const auto& task = tasks[i];
      report.records[i] = run_check(corpus[task.graph], task.t, task.param, spec);
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, tasks.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return report;
}

}  // namespace gsg
