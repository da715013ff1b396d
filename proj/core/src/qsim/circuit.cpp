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

#include "qimg/qsim/circuit.hpp"

#include <algorithm>
#include <string>

namespace qimg::qsim {

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw QubitIndexError("negative register width");
}

Circuit& Circuit::append(Gate gate) {
  validate_gate(gate, num_qubits_);
  if (gate.param_id) num_params_ = std::max(num_params_, *gate.param_id + 1);
  gates_.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.num_qubits() > num_qubits_) {
    throw QubitIndexError("cannot append a " + std::to_string(other.num_qubits()) +
                          "-qubit circuit onto " + std::to_string(num_qubits_) + " qubits");
  }
  gates_.reserve(gates_.size() + other.size());
  for (const Gate& g : other.gates()) append(g);
  return *this;
}

Circuit Circuit::widened(int num_qubits) const {
  Circuit out(num_qubits);
  out.append(*this);
  return out;
}

std::size_t circuit_size(const Circuit& circuit) { return circuit.size(); }

std::size_t circuit_depth(const Circuit& circuit) {
  std::vector<std::size_t> layer(static_cast<std::size_t>(circuit.num_qubits()), 0);
  std::size_t depth = 0;
  for (const Gate& g : circuit.gates()) {
    std::size_t level = 0;
    for (int q : g.targets) level = std::max(level, layer[q]);
    for (int q : g.controls) level = std::max(level, layer[q]);
    ++level;
    for (int q : g.targets) layer[q] = level;
    for (int q : g.controls) layer[q] = level;
    depth = std::max(depth, level);
  }
  return depth;
}

}  // namespace qimg::qsim
