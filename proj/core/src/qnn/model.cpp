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

#include "qimg/qnn/model.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

namespace qimg::qnn {

using qsim::Gate;
using qsim::GateKind;

std::string_view readout_name(Readout readout) { return readout == Readout::kZ ? "Z" : "Y"; }

Readout readout_from_name(std::string_view name) {
  if (name == "Z" || name == "z") return Readout::kZ;
  if (name == "Y" || name == "y") return Readout::kY;
  throw std::invalid_argument("readout must be Z or Y, got '" + std::string(name) + "'");
}

QnnModel::QnnModel(int data_qubits, ModelOptions options)
    : data_qubits_(data_qubits), options_(options), circuit_(data_qubits + 1) {}

qsim::PauliObservable QnnModel::observable() const {
  return qsim::PauliObservable::single(readout_qubit(),
                                       options_.readout == Readout::kZ ? qsim::Pauli::Z : qsim::Pauli::Y);
}

QnnModel build_model(int data_qubits, std::vector<GateKind> layer_kinds, ModelOptions options) {
  if (data_qubits < 1) throw std::invalid_argument("QNN needs at least one data qubit");
  if (layer_kinds.empty()) throw std::invalid_argument("QNN needs at least one layer");
  QnnModel model(data_qubits, options);
  const int readout = model.readout_qubit();
  model.circuit_.append(Gate::x(readout));
  model.circuit_.append(Gate::h(readout));
  int next_slot = 0;
  for (GateKind kind : layer_kinds) {
    if (!qsim::is_two_qubit_ising(kind)) {
      throw std::invalid_argument("QNN layers use XX, YY or ZZ, got " + std::string(qsim::gate_name(kind)));
    }
    LayerSpec layer{kind, {}};
    for (int i = 0; i < data_qubits; ++i) {
      const int slot = options.share_layer_params ? next_slot : next_slot + i;
      layer.param_ids.push_back(slot);
      model.circuit_.append(Gate::parametric(kind, {i, readout}, slot));
    }
    next_slot += options.share_layer_params ? 1 : data_qubits;
    model.layers_.push_back(std::move(layer));
  }
  model.circuit_.append(Gate::h(readout));
  return model;
}

qsim::Statevector encode_input(const QnnModel& model, const qsim::Circuit& input) {
  if (input.num_qubits() != model.data_qubits()) {
    throw std::invalid_argument("encoder acts on " + std::to_string(input.num_qubits()) +
                                " qubits, model has " + std::to_string(model.data_qubits()) + " data qubits");
  }
  if (input.num_params() != 0) throw std::invalid_argument("encoder circuits cannot have parameter slots");
  qsim::Statevector state(model.total_qubits());
  qsim::run_inplace(input, state, {});
  return state;
}

double forward_from_state(const QnnModel& model, qsim::Statevector state, std::span<const double> theta) {
  qsim::run_inplace(model.circuit(), state, theta);
  return qsim::expectation(state, model.observable());
}

double forward(const QnnModel& model, const qsim::Circuit& input, std::span<const double> theta) {
  return forward_from_state(model, encode_input(model, input), theta);
}

}  // namespace qimg::qnn
