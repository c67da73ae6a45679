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

#ifndef GSG_BUDGET_HPP_
#define GSG_BUDGET_HPP_

#include <chrono>
#include <cstdint>
#include <stdexcept>

namespace gsg {

// Raised when a computation would exceed a configured resource limit. Never
// accompanied by a partial answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverBudget {
  std::uint64_t node_limit = 1'000'000'000;
  std::chrono::milliseconds time_limit{300'000};
};

// Counts search nodes against a SolverBudget. Not thread-safe; one per solve.
class BudgetGuard {
 public:
  explicit BudgetGuard(const SolverBudget& budget);

  // Throws ResourceError once either limit is exceeded.
  void tick() {
    if (++nodes_ > budget_.node_limit) fail_nodes();
    if ((nodes_ & 0x3ff) == 0) check_clock();
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  [[noreturn]] void fail_nodes() const;
  void check_clock() const;

  SolverBudget budget_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
};

}  // namespace gsg

#endif  // GSG_BUDGET_HPP_
