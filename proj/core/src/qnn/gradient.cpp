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

#include "qimg/qnn/gradient.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qimg/qnn/loss.hpp"
#include "qimg/qsim/simulator.hpp"

namespace qimg::qnn {

using qsim::Gate;
using qsim::GateKind;
using qsim::Pauli;
using qsim::PauliTerm;

namespace {

// Generator P of a rotation gate exp(-i theta P / 2).
PauliTerm generator_of(const Gate& g) {
  switch (g.kind) {
    case GateKind::RX:
      return {1.0, {{g.targets[0], Pauli::X}}};
    case GateKind::RY:
      return {1.0, {{g.targets[0], Pauli::Y}}};
    case GateKind::RZ:
      return {1.0, {{g.targets[0], Pauli::Z}}};
    case GateKind::XX:
      return {1.0, {{g.targets[0], Pauli::X}, {g.targets[1], Pauli::X}}};
    case GateKind::YY:
      return {1.0, {{g.targets[0], Pauli::Y}, {g.targets[1], Pauli::Y}}};
    case GateKind::ZZ:
      return {1.0, {{g.targets[0], Pauli::Z}, {g.targets[1], Pauli::Z}}};
    default:
      throw std::invalid_argument(std::string(qsim::gate_name(g.kind)) + " has no Pauli generator");
  }
}

void check_theta(const qsim::Circuit& circuit, const qsim::Statevector& state, std::span<const double> theta) {
  if (state.num_qubits() != circuit.num_qubits()) {
    throw std::invalid_argument("input state has " + std::to_string(state.num_qubits()) + " qubits, circuit needs " +
                                std::to_string(circuit.num_qubits()));
  }
  if (theta.size() != static_cast<std::size_t>(circuit.num_params())) {
    throw qsim::ParameterError("circuit has " + std::to_string(circuit.num_params()) + " parameters, got " +
                               std::to_string(theta.size()));
  }
}

}  // namespace

OutputGradient circuit_gradient_shift(const qsim::Circuit& circuit, const qsim::PauliObservable& observable,
                                      const qsim::Statevector& input_state, std::span<const double> theta) {
  check_theta(circuit, input_state, theta);
  const auto& gates = circuit.gates();
  OutputGradient out;
  out.gradient.assign(theta.size(), 0.0);

  auto finish = [&](qsim::Statevector s, std::size_t from) {
    for (std::size_t j = from; j < gates.size(); ++j) {
      qsim::apply_inplace(s, gates[j], qsim::resolve_angle(gates[j], theta));
    }
    return qsim::expectation(s, observable);
  };

  qsim::Statevector prefix = input_state;
  for (std::size_t k = 0; k < gates.size(); ++k) {
    const Gate& g = gates[k];
    const double angle = qsim::resolve_angle(g, theta);
    if (g.param_id) {
      generator_of(g);  // rejects gates without a Pauli generator
      double shifted[2];
      for (int side = 0; side < 2; ++side) {
        qsim::Statevector s = prefix;
        const double delta = side == 0 ? std::numbers::pi / 2 : -std::numbers::pi / 2;
        qsim::apply_inplace(s, g, angle + delta);
        shifted[side] = finish(std::move(s), k + 1);
      }
      out.gradient[*g.param_id] += 0.5 * (shifted[0] - shifted[1]);
    }
    qsim::apply_inplace(prefix, g, angle);
  }
  out.value = qsim::expectation(prefix, observable);
  return out;
}

OutputGradient circuit_gradient_adjoint(const qsim::Circuit& circuit, const qsim::PauliObservable& observable,
                                        const qsim::Statevector& input_state, std::span<const double> theta) {
  check_theta(circuit, input_state, theta);
  const auto& gates = circuit.gates();
  OutputGradient out;
  out.gradient.assign(theta.size(), 0.0);

  qsim::Statevector psi = input_state;
  qsim::run_inplace(circuit, psi, theta);
  out.value = qsim::expectation(psi, observable);

  // Co-state O|psi>, swept backwards alongside psi. For U = exp(-i t P/2),
  // df/dt = Im <lambda_k| P |psi_k>.
  qsim::Statevector lambda(psi.num_qubits());
  std::fill(lambda.amplitudes().begin(), lambda.amplitudes().end(), qsim::Amplitude{0.0, 0.0});
  for (const PauliTerm& term : observable.terms) {
    qsim::Statevector part = psi;
    qsim::apply_pauli_string(part, term);
    for (std::size_t i = 0; i < part.dim(); ++i) lambda[i] += term.coefficient * part[i];
  }
  for (std::size_t k = gates.size(); k-- > 0;) {
    const Gate& g = gates[k];
    const double angle = qsim::resolve_angle(g, theta);
    if (g.param_id) {
      const auto z = qsim::pauli_matrix_element(lambda.amplitudes(), psi.amplitudes(), generator_of(g),
                                                psi.num_qubits());
      out.gradient[*g.param_id] += z.imag();
    }
    if (k == 0) break;
    qsim::apply_inverse_inplace(psi, g, angle);
    qsim::apply_inverse_inplace(lambda, g, angle);
  }
  return out;
}

OutputGradient output_gradient_shift(const QnnModel& model, const qsim::Statevector& input_state,
                                     std::span<const double> theta) {
  return circuit_gradient_shift(model.circuit(), model.observable(), input_state, theta);
}

OutputGradient output_gradient_adjoint(const QnnModel& model, const qsim::Statevector& input_state,
                                       std::span<const double> theta) {
  return circuit_gradient_adjoint(model.circuit(), model.observable(), input_state, theta);
}

BatchGradient loss_gradient(const QnnModel& model, std::span<const qsim::Circuit> inputs,
                            std::span<const int> labels, std::span<const double> theta, GradientMethod method) {
  if (inputs.size() != labels.size()) throw std::invalid_argument("input/label count mismatch");
  BatchGradient out;
  out.gradient.assign(theta.size(), 0.0);
  out.predictions.reserve(inputs.size());
  if (inputs.empty()) return out;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const qsim::Statevector state = encode_input(model, inputs[i]);
    const OutputGradient og = method == GradientMethod::kAdjoint ? output_gradient_adjoint(model, state, theta)
                                                                 : output_gradient_shift(model, state, theta);
    const int y = labels[i];
    out.loss += hinge_loss(y, og.value);
    out.predictions.push_back(og.value);
    if (y * og.value < 1.0) {
      for (std::size_t p = 0; p < theta.size(); ++p) out.gradient[p] -= y * og.gradient[p];
    }
  }
  const double scale = 1.0 / static_cast<double>(inputs.size());
  out.loss *= scale;
  for (double& g : out.gradient) g *= scale;
  return out;
}

}  // namespace qimg::qnn
