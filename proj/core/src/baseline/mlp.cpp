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

#include "qimg/baseline/mlp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <string>

#include "qimg/common/rng.hpp"

namespace qimg::baseline {

MlpModel::MlpModel(std::vector<int> layer_sizes) : sizes_(std::move(layer_sizes)) {
  if (sizes_.size() < 2) throw std::invalid_argument("MLP needs input and output layers");
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("MLP layer sizes must be positive");
  }
  std::size_t total = 0;
  for (int l = 0; l < num_layers(); ++l) {
    offsets_.push_back(total);
    total += static_cast<std::size_t>(sizes_[l + 1]) * (sizes_[l] + 1);
  }
  params_.assign(total, 0.0);
}

MlpModel MlpModel::initialized(std::vector<int> layer_sizes, std::uint64_t seed) {
  MlpModel model(std::move(layer_sizes));
  Rng rng(seed);
  for (int l = 0; l < model.num_layers(); ++l) {
    const int in = model.sizes_[l];
    const int out = model.sizes_[l + 1];
    const double limit = std::sqrt(6.0 / (in + out));
    for (int o = 0; o < out; ++o) {
      for (int i = 0; i < in; ++i) model.weight(l, o, i) = rng.uniform(-limit, limit);
    }
  }
  return model;
}

std::size_t MlpModel::bias_offset(int layer) const {
  return offsets_[layer] + static_cast<std::size_t>(sizes_[layer + 1]) * sizes_[layer];
}

double& MlpModel::weight(int layer, int out, int in) {
  return params_[weight_offset(layer) + static_cast<std::size_t>(out) * sizes_[layer] + in];
}
double MlpModel::weight(int layer, int out, int in) const {
  return params_[weight_offset(layer) + static_cast<std::size_t>(out) * sizes_[layer] + in];
}
double& MlpModel::bias(int layer, int out) { return params_[bias_offset(layer) + out]; }
double MlpModel::bias(int layer, int out) const { return params_[bias_offset(layer) + out]; }

double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

namespace {

// Activations per layer, input first.
std::vector<std::vector<double>> activations(const MlpModel& model, std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.input_dim()) {
    throw std::invalid_argument("MLP input has dimension " + std::to_string(x.size()) + ", expected " +
                                std::to_string(model.input_dim()));
  }
  const auto& sizes = model.layer_sizes();
  std::vector<std::vector<double>> acts;
  acts.emplace_back(x.begin(), x.end());
  for (int l = 0; l < model.num_layers(); ++l) {
    std::vector<double> next(static_cast<std::size_t>(sizes[l + 1]));
    for (int o = 0; o < sizes[l + 1]; ++o) {
      double z = model.bias(l, o);
      for (int i = 0; i < sizes[l]; ++i) z += model.weight(l, o, i) * acts.back()[i];
      next[o] = sigmoid(z);
    }
    acts.push_back(std::move(next));
  }
  return acts;
}

constexpr double kProbFloor = 1e-12;

double bce(double p, double target) {
  const double clipped = std::min(std::max(p, kProbFloor), 1.0 - kProbFloor);
  return -(target * std::log(clipped) + (1.0 - target) * std::log(1.0 - clipped));
}

void check_pairs(std::size_t xs, std::size_t ys) {
  if (xs != ys) throw std::invalid_argument("sample/target count mismatch");
}

}  // namespace

double mlp_forward(const MlpModel& model, std::span<const double> x) { return activations(model, x).back()[0]; }

double bce_loss(const MlpModel& model, std::span<const std::vector<double>> xs, std::span<const double> targets) {
  check_pairs(xs.size(), targets.size());
  if (xs.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t n = 0; n < xs.size(); ++n) sum += bce(mlp_forward(model, xs[n]), targets[n]);
  return sum / static_cast<double>(xs.size());
}

std::vector<double> bce_gradient(const MlpModel& model, std::span<const std::vector<double>> xs,
                                 std::span<const double> targets) {
  check_pairs(xs.size(), targets.size());
  MlpModel grad(model.layer_sizes());
  if (xs.empty()) return {grad.params().begin(), grad.params().end()};
  const auto& sizes = model.layer_sizes();
  const int layers = model.num_layers();
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const auto acts = activations(model, xs[n]);
    // Sigmoid output with cross-entropy: dL/dz = p - t.
    std::vector<double> delta{acts.back()[0] - targets[n]};
    for (int l = layers - 1; l >= 0; --l) {
      const auto& in = acts[l];
      for (int o = 0; o < sizes[l + 1]; ++o) {
        grad.bias(l, o) += delta[o];
        for (int i = 0; i < sizes[l]; ++i) grad.weight(l, o, i) += delta[o] * in[i];
      }
      if (l == 0) break;
      std::vector<double> prev(static_cast<std::size_t>(sizes[l]), 0.0);
      for (int i = 0; i < sizes[l]; ++i) {
        double back = 0.0;
        for (int o = 0; o < sizes[l + 1]; ++o) back += model.weight(l, o, i) * delta[o];
        prev[i] = back * in[i] * (1.0 - in[i]);
      }
      delta = std::move(prev);
    }
  }
  const double scale = 1.0 / static_cast<double>(xs.size());
  std::vector<double> out(grad.params().begin(), grad.params().end());
  for (double& g : out) g *= scale;
  return out;
}

double mlp_accuracy(const MlpModel& model, std::span<const std::vector<double>> xs, std::span<const int> labels) {
  check_pairs(xs.size(), labels.size());
  if (xs.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t n = 0; n < xs.size(); ++n) {
    const int predicted = mlp_forward(model, xs[n]) >= 0.5 ? 1 : -1;
    if (predicted == labels[n]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(xs.size());
}

namespace {

std::vector<double> targets_of(std::span<const int> labels) {
  std::vector<double> t;
  t.reserve(labels.size());
  for (int y : labels) {
    if (y != 1 && y != -1) throw std::invalid_argument("labels must be +1 or -1");
    t.push_back(y == 1 ? 1.0 : 0.0);
  }
  return t;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

MlpTrainResult mlp_train(MlpModel model, std::span<const std::vector<double>> train_x,
                         std::span<const int> train_labels, std::span<const std::vector<double>> test_x,
                         std::span<const int> test_labels, const MlpTrainConfig& config) {
  if (train_x.empty()) throw std::invalid_argument("training set is empty");
  check_pairs(train_x.size(), train_labels.size());
  check_pairs(test_x.size(), test_labels.size());
  if (config.epochs < 1 || config.batch_size < 1) throw std::invalid_argument("epochs and batch size must be >= 1");

  const auto started = std::chrono::steady_clock::now();
  const std::vector<double> targets = targets_of(train_labels);
  Optimizer optimizer(model.params().size(), config.optimizer);
  Rng rng(config.seed);

  TrainReport report;
  report.seed = config.seed;
  std::string sizes;
  for (int s : model.layer_sizes()) sizes += (sizes.empty() ? "" : ",") + std::to_string(s);
  report.config = {
      {"epochs", std::to_string(config.epochs)},
      {"batch_size", std::to_string(config.batch_size)},
      {"optimizer", std::string(optimizer_name(config.optimizer.kind))},
      {"learning_rate", num(config.optimizer.learning_rate)},
      {"beta1", num(config.optimizer.beta1)},
      {"beta2", num(config.optimizer.beta2)},
      {"epsilon", num(config.optimizer.epsilon)},
      {"layer_sizes", sizes},
      {"activation", "sigmoid"},
  };
  report.initial = {bce_loss(model, train_x, targets), mlp_accuracy(model, train_x, train_labels),
                    mlp_accuracy(model, test_x, test_labels)};

  std::vector<std::size_t> order(train_x.size());
  std::iota(order.begin(), order.end(), 0);
  const auto batch = static_cast<std::size_t>(config.batch_size);
  std::vector<std::vector<double>> bx;
  std::vector<double> by;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(std::span(order));
    double loss_sum = 0.0;
    std::size_t hits = 0;
    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t stop = std::min(order.size(), start + batch);
      bx.clear();
      by.clear();
      for (std::size_t i = start; i < stop; ++i) {
        bx.push_back(train_x[order[i]]);
        by.push_back(targets[order[i]]);
        const double p = mlp_forward(model, bx.back());
        loss_sum += bce(p, by.back());
        if ((p >= 0.5 ? 1.0 : 0.0) == by.back()) ++hits;
      }
      const std::vector<double> grad = bce_gradient(model, bx, by);
      optimizer.step(model.params(), grad);
    }
    const double n = static_cast<double>(order.size());
    report.epochs.push_back({loss_sum / n, static_cast<double>(hits) / n, mlp_accuracy(model, test_x, test_labels)});
  }
  report.final_train_loss = bce_loss(model, train_x, targets);
  report.final_test_acc = report.epochs.back().test_acc;
  report.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return {std::move(report), std::move(model)};
}

}  // namespace qimg::baseline
