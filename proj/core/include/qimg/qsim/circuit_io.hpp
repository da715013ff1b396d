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

#include <stdexcept>
#include <string>
#include <string_view>

#include "qimg/qsim/circuit.hpp"

namespace qimg::qsim {

class CircuitFormatError : public std::runtime_error {
 public:
  explicit CircuitFormatError(const std::string& message) : std::runtime_error(message) {}
};

// Line-oriented text form:
//
//   qubits N params P
//   KIND t0 t1 ... | c0 c1 ... | ANGLE
//
// ANGLE is a decimal literal, `p<k>` for parameter slot k, or `-` when the gate
// has none. Blank lines and lines starting with '#' are ignored on input.
std::string circuit_to_text(const Circuit& circuit);
Circuit circuit_from_text(std::string_view text);

}  // namespace qimg::qsim
