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

#include "qimg/qsim/circuit.hpp"

namespace qimg::qsim {

enum class Basis {
  // MCX with k >= 3 controls becomes a compute/uncompute chain of CCX gates
  // over k-2 clean ancillas placed after the original register. MCX with
  // 0, 1, 2 controls becomes X, CX, CCX.
  kCcxLevel,
  // kCcxLevel, then each CCX becomes 6 CX plus H/T/Tdg.
  kStandard,
};

/// Used for resource accounting only; simulation always applies MCX directly.
/// The output register is wider than the input when ancillas are needed; they
/// start and end in |0>.
Circuit decompose(const Circuit& circuit, Basis basis);

/// Ancillas decompose() appends for this circuit.
int ancillas_required(const Circuit& circuit);

}  // namespace qimg::qsim
