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

#include "qimg/qsim/gate.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace qimg::qsim {
namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
};

constexpr std::array<KindInfo, 18> kKinds{{
    {GateKind::I, "I"},     {GateKind::X, "X"},     {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},     {GateKind::H, "H"},     {GateKind::S, "S"},
    {GateKind::Sdg, "SDG"}, {GateKind::T, "T"},     {GateKind::Tdg, "TDG"},
    {GateKind::CX, "CX"},   {GateKind::CCX, "CCX"}, {GateKind::MCX, "MCX"},
    {GateKind::RX, "RX"},   {GateKind::RY, "RY"},   {GateKind::RZ, "RZ"},
    {GateKind::XX, "XX"},   {GateKind::YY, "YY"},   {GateKind::ZZ, "ZZ"},
}};

}  // namespace

std::string_view gate_name(GateKind kind) {
  for (const auto& info : kKinds) {
    if (info.kind == kind) return info.name;
  }
  return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto& info : kKinds) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

bool is_rotation(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::XX:
    case GateKind::YY:
    case GateKind::ZZ:
      return true;
    default:
      return false;
  }
}

bool is_two_qubit_ising(GateKind kind) {
  return kind == GateKind::XX || kind == GateKind::YY || kind == GateKind::ZZ;
}

Gate Gate::fixed(GateKind kind, std::vector<int> targets, std::vector<int> controls) {
  Gate g;
  g.kind = kind;
  g.targets = std::move(targets);
  g.controls = std::move(controls);
  return g;
}

Gate Gate::rotation(GateKind kind, std::vector<int> targets, double theta) {
  Gate g = fixed(kind, std::move(targets));
  g.theta = theta;
  return g;
}

Gate Gate::parametric(GateKind kind, std::vector<int> targets, int param_id) {
  Gate g = fixed(kind, std::move(targets));
  g.param_id = param_id;
  return g;
}

std::vector<int> Gate::qubits() const {
  std::vector<int> all = targets;
  all.insert(all.end(), controls.begin(), controls.end());
  return all;
}

void validate_gate(const Gate& gate, int num_qubits) {
  std::size_t want_targets = 1;
  std::size_t want_controls = 0;
  bool any_controls = false;
  switch (gate.kind) {
    case GateKind::CX:
      want_controls = 1;
      break;
    case GateKind::CCX:
      want_controls = 2;
      break;
    case GateKind::MCX:
      any_controls = true;
      break;
    case GateKind::XX:
    case GateKind::YY:
    case GateKind::ZZ:
      want_targets = 2;
      break;
    default:
      break;
  }
  const std::string name(gate_name(gate.kind));
  if (gate.targets.size() != want_targets) {
    throw GateError(name + " expects " + std::to_string(want_targets) + " target(s), got " +
                    std::to_string(gate.targets.size()));
  }
  if (!any_controls && gate.controls.size() != want_controls) {
    throw GateError(name + " expects " + std::to_string(want_controls) + " control(s), got " +
                    std::to_string(gate.controls.size()));
  }
  if (!is_rotation(gate.kind) && (gate.theta || gate.param_id)) {
    throw GateError(name + " takes no angle");
  }
  if (gate.param_id && *gate.param_id < 0) {
    throw ParameterError("negative parameter slot on " + name);
  }
  std::vector<int> all = gate.qubits();
  for (int q : all) {
    if (q < 0 || q >= num_qubits) {
      throw QubitIndexError(name + " qubit " + std::to_string(q) + " outside register of " +
                            std::to_string(num_qubits));
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw GateError(name + " repeats a qubit");
  }
}

}  // namespace qimg::qsim
