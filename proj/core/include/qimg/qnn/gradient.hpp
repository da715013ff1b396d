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
#include <vector>

#include "qimg/qnn/model.hpp"
#include "qimg/qsim/circuit.hpp"
#include "qimg/qsim/statevector.hpp"

namespace qimg::qnn {

enum class GradientMethod {
  // Two shifted circuit evaluations per gate instance.
  kParameterShift,
  // One reverse sweep through the model circuit with a co-state; same values
  // as kParameterShift to rounding.
  kAdjoint,
};

struct OutputGradient {
  double value = 0.0;
  std::vector<double> gradient;  // d value / d theta
};

/// <O> after running `circuit` on `input_state`, and its gradient. Every
/// parametric gate is exp(-i theta P / 2) with P a Pauli string, so
/// d<O>/d theta_k = (f(theta_k + pi/2) - f(theta_k - pi/2)) / 2 per gate
/// instance; instances sharing a slot are summed. std::invalid_argument for a
/// parametric gate without a Pauli generator.
OutputGradient circuit_gradient_shift(const qsim::Circuit& circuit, const qsim::PauliObservable& observable,
                                      const qsim::Statevector& input_state, std::span<const double> theta);
OutputGradient circuit_gradient_adjoint(const qsim::Circuit& circuit, const qsim::PauliObservable& observable,
                                        const qsim::Statevector& input_state, std::span<const double> theta);

/// The above for the model circuit and readout observable.
OutputGradient output_gradient_shift(const QnnModel& model, const qsim::Statevector& input_state,
                                     std::span<const double> theta);
OutputGradient output_gradient_adjoint(const QnnModel& model, const qsim::Statevector& input_state,
                                       std::span<const double> theta);

struct BatchGradient {
  double loss = 0.0;                // mean hinge loss
  std::vector<double> gradient;     // of the mean hinge loss
  std::vector<double> predictions;  // readout values, batch order
};

/// Mean hinge loss and its subgradient over a batch of encoder circuits:
/// -y * df/dtheta where the margin y*f is below 1, zero otherwise (including
/// a margin of exactly 1).
BatchGradient loss_gradient(const QnnModel& model, std::span<const qsim::Circuit> inputs,
                            std::span<const int> labels, std::span<const double> theta,
                            GradientMethod method = GradientMethod::kAdjoint);

}  // namespace qimg::qnn
