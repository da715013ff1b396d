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
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qimg {

struct EpochMetrics {
  double loss = 0.0;
  double train_acc = 0.0;
  double test_acc = 0.0;

  bool operator==(const EpochMetrics&) const = default;
};

/// Outcome of one seeded training run. Serialized as
///
///   {"seed", "config", "initial", "epochs": [{"loss", "train_acc", "test_acc"}],
///    "final_train_loss", "final_test_acc", "wall_time_s"}
///
/// `initial` holds full-pass metrics before the first update; per-epoch
/// loss/train_acc are running means over the epoch's mini-batches.
struct TrainReport {
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;
  EpochMetrics initial;
  std::vector<EpochMetrics> epochs;
  double final_train_loss = 0.0;
  double final_test_acc = 0.0;
  double wall_time_s = 0.0;
};

std::string to_json(const TrainReport& report, bool include_wall_time = true);
TrainReport train_report_from_json(std::string_view text);

}  // namespace qimg
