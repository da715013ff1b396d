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
#include <span>

#include "qimg/qsim/circuit.hpp"

namespace qimg::encoders {

/// One X per 1-entry, on the qubit with the entry's index. Entries must be
/// 0 or 1 (std::invalid_argument otherwise).
qsim::Circuit threshold_encode(std::span<const std::uint8_t> bits);

}  // namespace qimg::encoders
