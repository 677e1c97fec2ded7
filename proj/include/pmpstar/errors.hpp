/*
 Copyright 2026 The pmpstar Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace pmpstar {

/// Precondition violation in a public API call (dimension mismatch,
/// incompatible grids, invalid configuration).
class ContractError : public std::invalid_argument {
 public:
  explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

/// A state or costate became non-finite while integrating.
class IntegrationDivergedError : public std::runtime_error {
 public:
  IntegrationDivergedError(const std::string& what, int step_index)
      : std::runtime_error(what + " (step " + std::to_string(step_index) + ")"),
        step_index_(step_index) {}
  int step_index() const noexcept { return step_index_; }

 private:
  int step_index_;
};

/// Pointwise Hamiltonian maximization is unbounded: the expected Hamiltonian
/// is linear in a control direction with no box bound to stop it.
class AbnormalStructureError : public std::runtime_error {
 public:
  AbnormalStructureError(const std::string& what, int node_index)
      : std::runtime_error(what + " (node " + std::to_string(node_index) + ")"),
        node_index_(node_index) {}
  int node_index() const noexcept { return node_index_; }

 private:
  int node_index_;
};

/// A tensor-product quadrature request would exceed the node budget.
class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pmpstar
