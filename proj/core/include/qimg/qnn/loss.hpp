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

namespace qimg::qnn {

/// max(0, 1 - y * prediction); y must be +1 or -1.
double hinge_loss(int y_true, double y_pred);

/// Batch mean of hinge_loss.
double hinge_loss(std::span<const int> y_true, std::span<const double> y_pred);

/// Fraction with sign(y_pred) == y_true; sign(0) counts as +1.
double hinge_accuracy(std::span<const int> y_true, std::span<const double> y_pred);

}  // namespace qimg::qnn
