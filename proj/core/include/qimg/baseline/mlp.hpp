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

namespace qimg::baseline {

/// Fully connected sigmoid network. All weights and biases live in one flat
/// vector: per layer, an out x in row-major weight block followed by out biases.
class MlpModel {
 public:
  // Zero-initialized; layer_sizes = {input_dim, hidden..., 1}.
  explicit MlpModel(std::vector<int> layer_sizes);

  // Glorot-uniform weights, zero biases.
  static MlpModel initialized(std::vector<int> layer_sizes, std::uint64_t seed);

  const std::vector<int>& layer_sizes() const { return sizes_; }
  int input_dim() const { return sizes_.front(); }
  int num_layers() const { return static_cast<int>(sizes_.size()) - 1; }

  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }

  double& weight(int layer, int out, int in);
  double weight(int layer, int out, int in) const;
  double& bias(int layer, int out);
  double bias(int layer, int out) const;

 private:
  std::size_t weight_offset(int layer) const { return offsets_[layer]; }
  std::size_t bias_offset(int layer) const;

  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<double> params_;
};

double sigmoid(double z);

/// Sigmoid output in (0, 1), read as P(label = +1). Throws
/// std::invalid_argument on a dimension mismatch.
double mlp_forward(const MlpModel& model, std::span<const double> x);

/// Mean binary cross-entropy over (x, target) pairs, targets in {0, 1}.
double bce_loss(const MlpModel& model, std::span<const std::vector<double>> xs, std::span<const double> targets);

/// Backpropagated gradient of bce_loss, laid out like params().
std::vector<double> bce_gradient(const MlpModel& model, std::span<const std::vector<double>> xs,
                                 std::span<const double> targets);

struct MlpTrainConfig {
  int epochs = 20;
  int batch_size = 32;
  std::uint64_t seed = 0;
  OptimizerConfig optimizer{OptimizerKind::kAdam, 1e-3, 0.9, 0.999, 1e-8};
};

struct MlpTrainResult {
  TrainReport report;
  MlpModel model;
};

/// Labels are +1/-1 and map to targets 1/0. Report loss is binary
/// cross-entropy; accuracies threshold the output at 0.5. Throws
/// std::invalid_argument on an empty training set.
MlpTrainResult mlp_train(MlpModel model, std::span<const std::vector<double>> train_x,
                         std::span<const int> train_labels, std::span<const std::vector<double>> test_x,
                         std::span<const int> test_labels, const MlpTrainConfig& config);

double mlp_accuracy(const MlpModel& model, std::span<const std::vector<double>> xs, std::span<const int> labels);

}  // namespace qimg::baseline
