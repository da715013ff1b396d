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

#include <cstddef>
#include <string>

#include "qimg/qsim/circuit.hpp"

namespace qimg::encoders {

struct ResourceReport {
  int qubits = 0;
  std::size_t size_raw = 0;
  std::size_t depth_raw = 0;
  // After decompose(kStandard); ancillas are not counted in `qubits`.
  std::size_t size_std = 0;
  std::size_t depth_std = 0;
  std::size_t mcx_count = 0;

  bool operator==(const ResourceReport&) const = default;
};

ResourceReport resource_report(const qsim::Circuit& circuit);

struct ResourceRow {
  int image_side = 0;
  int q = 0;
  bool compressed = false;
  ResourceReport report;
};

std::string resource_csv_header();
std::string to_csv_row(const ResourceRow& row);

}  // namespace qimg::encoders
