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
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qimg/common/train_report.hpp"
#include "qimg/encoders/resources.hpp"
#include "qimg/imgdata/dataset.hpp"
#include "qimg/qsim/circuit.hpp"

namespace qimg::cli {

class CliError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ConfigMap = std::map<std::string, std::string>;

/// Flat `key=value` lines; blank lines and lines starting with '#' are skipped.
ConfigMap parse_config(std::string_view text);
ConfigMap read_config_file(const std::filesystem::path& path);

/// Directory named by QIMG_DATA_DIR, or "data" when unset.
std::filesystem::path default_data_dir();

struct PrepareOptions {
  std::filesystem::path train_images;
  std::filesystem::path train_labels;
  std::filesystem::path test_images;
  std::filesystem::path test_labels;
  int width = 4;
  int height = 4;
  int pca_k = 0;  // 0 disables the PCA feature files
  std::size_t subsample_train = 1000;
  std::size_t subsample_test = 200;
  std::uint64_t seed = 0;
  std::filesystem::path out = "prepared";

  // Standard Fashion-MNIST file names under `dir`.
  static PrepareOptions with_data_dir(const std::filesystem::path& dir);
};

/// Filters classes 0/3, subsamples, downscales, and writes train.records,
/// test.records, manifest.json (plus pca.json, train_pca.csv, test_pca.csv
/// when pca_k > 0). Returns the manifest text.
std::string prepare_data(const PrepareOptions& options);

/// Prepared split as written by prepare_data.
struct PreparedData {
  imgdata::LabeledDataset train;
  imgdata::LabeledDataset test;
  std::vector<std::vector<double>> train_pca;  // empty without PCA files
  std::vector<std::vector<double>> test_pca;
};

PreparedData load_prepared(const std::filesystem::path& dir);

enum class ModelKind { kQnn, kQnnNeqr, kClassical };
ModelKind model_from_name(std::string_view name);
std::string_view model_name(ModelKind kind);

struct TrainOptions {
  ModelKind model = ModelKind::kQnn;
  int jobs = 1;
  std::filesystem::path data = "prepared";
  std::filesystem::path out = "runs";
  // epochs (20), runs (10), seed (0), plus model and optimizer keys; see
  // train_config_keys(). Unknown keys are rejected.
  ConfigMap config;
};

std::vector<std::string> train_config_keys();

struct RunSummary {
  std::vector<TrainReport> reports;  // run order
  double mean = 0.0;                 // of final_test_acc
  double std = 0.0;                  // sample standard deviation; 0 for one run
};

/// Runs options.runs seeded trainings (seeds seed, seed+1, ...) and writes
/// run_NNN.json per run plus summary.json into options.out.
RunSummary train_runs(const TrainOptions& options);

/// Mean and sample standard deviation.
std::pair<double, double> mean_std(const std::vector<double>& values);

struct ResourceOptions {
  std::vector<int> sizes{2, 4, 8};
  int q = 8;
  bool compress = false;
  std::uint64_t seed = 0;
};

/// One row per size, each from a seeded random image.
std::vector<encoders::ResourceRow> resource_rows(const ResourceOptions& options);
std::string resource_csv(const std::vector<encoders::ResourceRow>& rows);

struct DumpOptions {
  std::string what = "neqr";  // neqr | threshold | qnn-model
  std::vector<std::uint8_t> pixels;  // square image, row-major
  int q = 8;
  bool compress = false;
  int data_qubits = 16;
  std::string layers = "XX,ZZ";
  std::string readout = "Z";
};

qsim::Circuit dump_circuit(const DumpOptions& options);

}  // namespace qimg::cli
