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

#include "qimg/qnn/loss.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qimg::qnn {
namespace {

void check_label(int y) {
  if (y != 1 && y != -1) throw std::invalid_argument("hinge label must be +1 or -1, got " + std::to_string(y));
}

void check_sizes(std::span<const int> y_true, std::span<const double> y_pred) {
  if (y_true.size() != y_pred.size()) throw std::invalid_argument("label/prediction count mismatch");
}

}  // namespace

double hinge_loss(int y_true, double y_pred) {
  check_label(y_true);
  return std::max(0.0, 1.0 - y_true * y_pred);
}

double hinge_loss(std::span<const int> y_true, std::span<const double> y_pred) {
  check_sizes(y_true, y_pred);
  if (y_true.empty()) return 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) sum += hinge_loss(y_true[i], y_pred[i]);
  return sum / static_cast<double>(y_true.size());
}

double hinge_accuracy(std::span<const int> y_true, std::span<const double> y_pred) {
  check_sizes(y_true, y_pred);
  if (y_true.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    check_label(y_true[i]);
    const int sign = y_pred[i] >= 0.0 ? 1 : -1;
    if (sign == y_true[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(y_true.size());
}

}  // namespace qimg::qnn
