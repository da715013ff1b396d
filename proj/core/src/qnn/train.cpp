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

#include "qimg/qnn/train.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qimg/common/rng.hpp"
#include "qimg/qnn/loss.hpp"

namespace qimg::qnn {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string layer_list(const QnnModel& model) {
  std::string out;
  for (const LayerSpec& l : model.layers()) {
    if (!out.empty()) out += ',';
    out += qsim::gate_name(l.kind);
  }
  return out;
}

std::vector<double> draw_theta(const QnnModel& model, Rng& rng) {
  std::vector<double> theta(static_cast<std::size_t>(model.num_params()));
  for (double& t : theta) t = rng.uniform(0.0, 2.0 * std::numbers::pi);
  return theta;
}

}  // namespace

std::vector<double> initial_theta(const QnnModel& model, std::uint64_t seed) {
  Rng rng(seed);
  return draw_theta(model, rng);
}

std::vector<double> predict(const QnnModel& model, std::span<const qsim::Circuit> inputs,
                            std::span<const double> theta) {
  std::vector<double> out;
  out.reserve(inputs.size());
  for (const qsim::Circuit& c : inputs) out.push_back(forward(model, c, theta));
  return out;
}

TrainResult train(const QnnModel& model, std::span<const qsim::Circuit> train_inputs,
                  std::span<const int> train_labels, std::span<const qsim::Circuit> test_inputs,
                  std::span<const int> test_labels, const TrainConfig& config) {
  if (train_inputs.empty()) throw std::invalid_argument("training set is empty");
  if (train_inputs.size() != train_labels.size() || test_inputs.size() != test_labels.size()) {
    throw std::invalid_argument("input/label count mismatch");
  }
  if (config.epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (config.batch_size < 1) throw std::invalid_argument("batch size must be >= 1");

  const auto started = std::chrono::steady_clock::now();
  Rng rng(config.seed);
  TrainResult result;
  result.theta = draw_theta(model, rng);
  Optimizer optimizer(result.theta.size(), config.optimizer);

  TrainReport& report = result.report;
  report.seed = config.seed;
  report.config = {
      {"epochs", std::to_string(config.epochs)},
      {"batch_size", std::to_string(config.batch_size)},
      {"optimizer", std::string(optimizer_name(config.optimizer.kind))},
      {"learning_rate", num(config.optimizer.learning_rate)},
      {"beta1", num(config.optimizer.beta1)},
      {"beta2", num(config.optimizer.beta2)},
      {"epsilon", num(config.optimizer.epsilon)},
      {"gradient", config.gradient == GradientMethod::kAdjoint ? "adjoint" : "parameter_shift"},
      {"data_qubits", std::to_string(model.data_qubits())},
      {"layers", layer_list(model)},
      {"readout", std::string(readout_name(model.readout()))},
      {"share_layer_params", model.options().share_layer_params ? "true" : "false"},
  };

  auto test_accuracy = [&] {
    if (test_inputs.empty()) return 0.0;
    return hinge_accuracy(test_labels, predict(model, test_inputs, result.theta));
  };

  {
    const auto preds = predict(model, train_inputs, result.theta);
    report.initial = {hinge_loss(train_labels, preds), hinge_accuracy(train_labels, preds), test_accuracy()};
  }

  std::vector<std::size_t> order(train_inputs.size());
  std::iota(order.begin(), order.end(), 0);
  const auto batch = static_cast<std::size_t>(config.batch_size);
  std::vector<qsim::Circuit> batch_inputs;
  std::vector<int> batch_labels;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(std::span(order));
    double loss_sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t stop = std::min(order.size(), start + batch);
      batch_inputs.clear();
      batch_labels.clear();
      for (std::size_t i = start; i < stop; ++i) {
        batch_inputs.push_back(train_inputs[order[i]]);
        batch_labels.push_back(train_labels[order[i]]);
      }
      const BatchGradient bg = loss_gradient(model, batch_inputs, batch_labels, result.theta, config.gradient);
      loss_sum += bg.loss * static_cast<double>(stop - start);
      for (std::size_t i = 0; i < bg.predictions.size(); ++i) {
        if ((bg.predictions[i] >= 0.0 ? 1 : -1) == batch_labels[i]) ++hits;
      }
      optimizer.step(result.theta, bg.gradient);
    }
    const double n = static_cast<double>(order.size());
    report.epochs.push_back({loss_sum / n, static_cast<double>(hits) / n, test_accuracy()});
  }

  report.final_train_loss = hinge_loss(train_labels, predict(model, train_inputs, result.theta));
  report.final_test_acc = report.epochs.back().test_acc;
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

}  // namespace qimg::qnn
