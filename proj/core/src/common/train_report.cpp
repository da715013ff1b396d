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

#include "qimg/common/train_report.hpp"

#include <nlohmann/json.hpp>

namespace qimg {
namespace {

nlohmann::json metrics_json(const EpochMetrics& m) {
  return {{"loss", m.loss}, {"train_acc", m.train_acc}, {"test_acc", m.test_acc}};
}

EpochMetrics metrics_from(const nlohmann::json& j) {
  return {j.at("loss").get<double>(), j.at("train_acc").get<double>(), j.at("test_acc").get<double>()};
}

}  // namespace

std::string to_json(const TrainReport& report, bool include_wall_time) {
  nlohmann::json j;
  j["seed"] = report.seed;
  j["config"] = report.config;
  j["initial"] = metrics_json(report.initial);
  auto& epochs = j["epochs"] = nlohmann::json::array();
  for (const EpochMetrics& m : report.epochs) epochs.push_back(metrics_json(m));
  j["final_train_loss"] = report.final_train_loss;
  j["final_test_acc"] = report.final_test_acc;
  if (include_wall_time) j["wall_time_s"] = report.wall_time_s;
  return j.dump(2);
}

TrainReport train_report_from_json(std::string_view text) {
  const auto j = nlohmann::json::parse(text);
  TrainReport r;
  r.seed = j.at("seed").get<std::uint64_t>();
  r.config = j.at("config").get<std::map<std::string, std::string>>();
  r.initial = metrics_from(j.at("initial"));
  for (const auto& e : j.at("epochs")) r.epochs.push_back(metrics_from(e));
  r.final_train_loss = j.at("final_train_loss").get<double>();
  r.final_test_acc = j.at("final_test_acc").get<double>();
  r.wall_time_s = j.value("wall_time_s", 0.0);
  return r;
}

}  // namespace qimg
