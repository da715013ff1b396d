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
#include <vector>

#include "qimg/common/optimizer.hpp"
#include "qimg/common/train_report.hpp"
#include "qimg/qnn/gradient.hpp"
#include "qimg/qnn/model.hpp"

namespace qimg::qnn {

struct TrainConfig {
  int epochs = 20;
  int batch_size = 32;
  std::uint64_t seed = 0;
  OptimizerConfig optimizer;  // Adam, lr 0.02, betas (0.9, 0.999), eps 1e-8
  GradientMethod gradient = GradientMethod::kAdjoint;
};

struct TrainResult {
  TrainReport report;
  std::vector<double> theta;
};

/// theta starts uniform in [0, 2*pi) from the seed; each epoch visits the
/// training set in a seeded shuffle, one optimizer step per mini-batch.
/// Deterministic for a fixed seed. Throws std::invalid_argument on an empty
/// training set or a bad config.
TrainResult train(const QnnModel& model, std::span<const qsim::Circuit> train_inputs,
                  std::span<const int> train_labels, std::span<const qsim::Circuit> test_inputs,
                  std::span<const int> test_labels, const TrainConfig& config);

/// Seeded initial parameter vector, the one train() starts from.
std::vector<double> initial_theta(const QnnModel& model, std::uint64_t seed);

/// Readout values for every input.
std::vector<double> predict(const QnnModel& model, std::span<const qsim::Circuit> inputs,
                            std::span<const double> theta);

}  // namespace qimg::qnn
