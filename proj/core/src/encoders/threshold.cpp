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

#include "qimg/encoders/threshold.hpp"

#include <stdexcept>
#include <string>

namespace qimg::encoders {

qsim::Circuit threshold_encode(std::span<const std::uint8_t> bits) {
  qsim::Circuit circuit(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) {
      throw std::invalid_argument("threshold input entry " + std::to_string(i) + " is not 0 or 1");
    }
    if (bits[i]) circuit.append(qsim::Gate::x(static_cast<int>(i)));
  }
  return circuit;
}

}  // namespace qimg::encoders
