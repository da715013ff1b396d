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

#include "qimg/imgdata/pca.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qimg::imgdata {

PcaModel pca_fit(const std::vector<std::vector<double>>& samples, int k) {
  if (samples.empty()) throw std::invalid_argument("PCA needs at least one sample");
  const auto dim = static_cast<Eigen::Index>(samples.front().size());
  if (k < 1 || k > dim) {
    throw std::invalid_argument("PCA k=" + std::to_string(k) + " outside [1, " + std::to_string(dim) + "]");
  }
  const auto n = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd data(n, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(samples[i].size()) != dim) {
      throw std::invalid_argument("PCA sample " + std::to_string(i) + " has the wrong dimension");
    }
    data.row(i) = Eigen::Map<const Eigen::RowVectorXd>(samples[i].data(), dim);
  }
  const Eigen::RowVectorXd mean = data.colwise().mean();
  data.rowwise() -= mean;
  // Unbiased sample covariance; a single sample gives the zero matrix.
  const double denom = n > 1 ? static_cast<double>(n - 1) : 1.0;
  const Eigen::MatrixXd cov = (data.transpose() * data) / denom;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
  if (solver.info() != Eigen::Success) throw std::runtime_error("covariance eigendecomposition failed");
  // Eigen sorts ascending.
  const Eigen::VectorXd& values = solver.eigenvalues();
  const Eigen::MatrixXd& vectors = solver.eigenvectors();

  PcaModel model;
  model.mean.assign(mean.data(), mean.data() + dim);
  const double scale = std::max(1.0, std::abs(values(dim - 1)));
  for (int c = 0; c < k; ++c) {
    const Eigen::Index col = dim - 1 - c;
    Eigen::VectorXd v = vectors.col(col);
    // Fix the sign: largest-magnitude entry positive.
    Eigen::Index pivot = 0;
    v.cwiseAbs().maxCoeff(&pivot);
    if (v(pivot) < 0) v = -v;
    model.components.emplace_back(v.data(), v.data() + dim);
    const double lambda = std::max(0.0, values(col));
    model.explained_variance.push_back(lambda);
    if (lambda <= 1e-12 * scale) model.rank_deficient = true;
  }
  return model;
}

std::vector<double> pca_transform(const PcaModel& model, std::span<const double> x) {
  if (static_cast<int>(x.size()) != model.dimension()) {
    throw std::invalid_argument("PCA input has dimension " + std::to_string(x.size()) + ", model expects " +
                                std::to_string(model.dimension()));
  }
  std::vector<double> out(model.components.size(), 0.0);
  for (std::size_t c = 0; c < model.components.size(); ++c) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += model.components[c][i] * (x[i] - model.mean[i]);
    out[c] = acc;
  }
  return out;
}

std::vector<double> pca_reconstruct(const PcaModel& model, std::span<const double> features) {
  if (static_cast<int>(features.size()) != model.k()) {
    throw std::invalid_argument("PCA feature vector has length " + std::to_string(features.size()) +
                                ", model has k=" + std::to_string(model.k()));
  }
  std::vector<double> out = model.mean;
  for (std::size_t c = 0; c < features.size(); ++c) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += features[c] * model.components[c][i];
  }
  return out;
}

}  // namespace qimg::imgdata
