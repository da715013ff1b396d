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
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qimg/qsim/circuit.hpp"
#include "qimg/qsim/gate.hpp"
#include "qimg/qsim/statevector.hpp"

namespace qimg::qsim {

class SimulationError : public std::runtime_error {
 public:
  explicit SimulationError(const std::string& message) : std::runtime_error(message) {}
};

enum class Pauli : std::uint8_t { X, Y, Z };

struct PauliTerm {
  double coefficient = 1.0;
  std::vector<std::pair<int, Pauli>> ops;
};

struct PauliObservable {
  std::vector<PauliTerm> terms;

  static PauliObservable single(int qubit, Pauli pauli) {
    return PauliObservable{{PauliTerm{1.0, {{qubit, pauli}}}}};
  }
};

/// Angle a gate is applied with: its literal theta, else theta[param_id].
/// Throws ParameterError when neither resolves.
double resolve_angle(const Gate& gate, std::span<const double> theta);

void apply_inplace(Statevector& state, const Gate& gate);
void apply_inplace(Statevector& state, const Gate& gate, double angle);
void apply_inverse_inplace(Statevector& state, const Gate& gate, double angle);

/// U*state. Parametric gates must carry a literal theta here.
Statevector apply(Statevector state, const Gate& gate);

/// Applies gates in order, binding parameter slots from `theta`.
/// Throws ParameterError when theta.size() != circuit.num_params().
void run_inplace(const Circuit& circuit, Statevector& state, std::span<const double> theta);
Statevector run(const Circuit& circuit, Statevector initial, std::span<const double> theta = {});

/// state <- P*state for a single Pauli string (coefficient ignored).
void apply_pauli_string(Statevector& state, const PauliTerm& term);

/// <bra|P|ket> for one Pauli string (coefficient ignored).
Amplitude pauli_matrix_element(std::span<const Amplitude> bra, std::span<const Amplitude> ket,
                               const PauliTerm& term, int num_qubits);

/// Real part of <psi|O|psi>; throws SimulationError if the imaginary residue
/// exceeds 1e-10.
double expectation(const Statevector& state, const PauliObservable& observable);

}  // namespace qimg::qsim
