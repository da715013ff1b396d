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

#include <span>
#include <string_view>
#include <vector>

#include "qimg/qsim/circuit.hpp"
#include "qimg/qsim/simulator.hpp"
#include "qimg/qsim/statevector.hpp"

namespace qimg::qnn {

enum class Readout { kZ, kY };

std::string_view readout_name(Readout readout);
Readout readout_from_name(std::string_view name);

struct LayerSpec {
  qsim::GateKind kind = qsim::GateKind::XX;
  std::vector<int> param_ids;  // one per data qubit
};

struct ModelOptions {
  Readout readout = Readout::kZ;
  // One slot per layer instead of one per gate instance.
  bool share_layer_params = false;
};

/// Layered data-to-readout classifier. Data qubits are 0..m-1, the readout is
/// qubit m. The circuit is X, H on the readout, then per layer G(data_i, readout)
/// for every i, then H on the readout; G is one of XX, YY, ZZ.
class QnnModel {
 public:
  int data_qubits() const { return data_qubits_; }
  int readout_qubit() const { return data_qubits_; }
  int total_qubits() const { return data_qubits_ + 1; }
  int num_params() const { return circuit_.num_params(); }
  const std::vector<LayerSpec>& layers() const { return layers_; }
  const qsim::Circuit& circuit() const { return circuit_; }
  Readout readout() const { return options_.readout; }
  const ModelOptions& options() const { return options_; }
  qsim::PauliObservable observable() const;

 private:
  friend QnnModel build_model(int, std::vector<qsim::GateKind>, ModelOptions);
  QnnModel(int data_qubits, ModelOptions options);

  int data_qubits_;
  ModelOptions options_;
  std::vector<LayerSpec> layers_;
  qsim::Circuit circuit_;
};

/// Throws std::invalid_argument for m < 1, no layers, or a non-Ising kind.
QnnModel build_model(int data_qubits, std::vector<qsim::GateKind> layer_kinds = {qsim::GateKind::XX,
                                                                                  qsim::GateKind::ZZ},
                     ModelOptions options = {});

/// Encoder circuit run from |0...0> on the model's full register. Throws
/// std::invalid_argument when the encoder width differs from the model's data
/// width or the encoder has parameter slots.
qsim::Statevector encode_input(const QnnModel& model, const qsim::Circuit& input);

/// Readout expectation after input ++ model circuit; in [-1, 1].
double forward(const QnnModel& model, const qsim::Circuit& input, std::span<const double> theta);
double forward_from_state(const QnnModel& model, qsim::Statevector state, std::span<const double> theta);

}  // namespace qimg::qnn
