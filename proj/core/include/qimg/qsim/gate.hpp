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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qimg::qsim {

class QubitIndexError : public std::out_of_range {
 public:
  explicit QubitIndexError(const std::string& message) : std::out_of_range(message) {}
};

class ParameterError : public std::invalid_argument {
 public:
  explicit ParameterError(const std::string& message) : std::invalid_argument(message) {}
};

class GateError : public std::invalid_argument {
 public:
  explicit GateError(const std::string& message) : std::invalid_argument(message) {}
};

/// Gate alphabet. Rotations follow exp(-i*theta*P/2); XX/YY/ZZ use P (x) P.
/// Sdg and Tdg are the adjoints of S and T and appear in CCX decompositions.
enum class GateKind : std::uint8_t {
  I, X, Y, Z, H, S, Sdg, T, Tdg,
  CX, CCX, MCX,
  RX, RY, RZ,
  XX, YY, ZZ,
};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

bool is_rotation(GateKind kind);
bool is_two_qubit_ising(GateKind kind);

struct Gate {
  GateKind kind = GateKind::I;
  std::vector<int> targets;
  std::vector<int> controls;
  std::optional<double> theta;
  std::optional<int> param_id;

  static Gate fixed(GateKind kind, std::vector<int> targets, std::vector<int> controls = {});
  static Gate rotation(GateKind kind, std::vector<int> targets, double theta);
  static Gate parametric(GateKind kind, std::vector<int> targets, int param_id);

  static Gate i(int q) { return fixed(GateKind::I, {q}); }
  static Gate x(int q) { return fixed(GateKind::X, {q}); }
  static Gate h(int q) { return fixed(GateKind::H, {q}); }
  static Gate cx(int control, int target) { return fixed(GateKind::CX, {target}, {control}); }
  static Gate ccx(int c0, int c1, int target) { return fixed(GateKind::CCX, {target}, {c0, c1}); }
  static Gate mcx(std::vector<int> controls, int target) {
    return fixed(GateKind::MCX, {target}, std::move(controls));
  }

  // Qubits touched by the gate, targets first.
  std::vector<int> qubits() const;

  bool operator==(const Gate&) const = default;
};

// Throws GateError on malformed arity or duplicate qubits, QubitIndexError on
// an index >= num_qubits.
void validate_gate(const Gate& gate, int num_qubits);

}  // namespace qimg::qsim
