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

#include "gsg/budget.hpp"

#include <string>

namespace gsg {

BudgetGuard::BudgetGuard(const SolverBudget& budget)
    : budget_(budget), deadline_(std::chrono::steady_clock::now() + budget.time_limit) {}

void BudgetGuard::fail_nodes() const {
  throw ResourceError("search node limit of " + std::to_string(budget_.node_limit) +
                      " exceeded");
}

void BudgetGuard::check_clock() const {
  if (std::chrono::steady_clock::now() > deadline_) {
    throw ResourceError("time limit of " + std::to_string(budget_.time_limit.count()) +
                        " ms exceeded");
  }
}

}  // namespace gsg
