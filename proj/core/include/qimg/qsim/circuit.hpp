// Copyright 2026 The qimg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

#include "qimg/qsim/gate.hpp"

namespace qimg::qsim {

/// Ordered gate list over a fixed register. Every appended gate is validated
/// against the register width; num_params() is one past the largest slot id.
class Circuit {
 public:
  explicit Circuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  int num_params() const { return num_params_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }

  Circuit& append(Gate gate);
  // Appends every gate of `other`, which must not be wider than this circuit.
  Circuit& append(const Circuit& other);

  // Same gates on a register of `num_qubits` >= current width.
  Circuit widened(int num_qubits) const;

  bool operator==(const Circuit&) const = default;

 private:
  int num_qubits_;
  int num_params_ = 0;
  std::vector<Gate> gates_;
};

/// Gate count.
std::size_t circuit_size(const Circuit& circuit);

/// Longest chain of gates where each consecutive pair shares a qubit,
/// computed greedily with one layer counter per qubit.
std::size_t circuit_depth(const Circuit& circuit);

}  // namespace qimg::qsim
