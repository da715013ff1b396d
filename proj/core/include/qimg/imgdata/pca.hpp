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

namespace qimg::imgdata {

/// Projection onto the top-k eigenvectors of the sample covariance.
struct PcaModel {
  std::vector<double> mean;
  // k rows, each of the input dimension, pairwise orthonormal.
  std::vector<std::vector<double>> components;
  // Covariance eigenvalue per component, non-increasing.
  std::vector<double> explained_variance;
  // Set when fewer than k eigenvalues are numerically nonzero.
  bool rank_deficient = false;

  int k() const { return static_cast<int>(components.size()); }
  int dimension() const { return static_cast<int>(mean.size()); }
};

/// Throws std::invalid_argument on an empty sample set, ragged rows, or
/// k outside [1, dimension].
PcaModel pca_fit(const std::vector<std::vector<double>>& samples, int k);

/// components * (x - mean).
std::vector<double> pca_transform(const PcaModel& model, std::span<const double> x);

/// mean + components^T * features.
std::vector<double> pca_reconstruct(const PcaModel& model, std::span<const double> features);

}  // namespace qimg::imgdata
