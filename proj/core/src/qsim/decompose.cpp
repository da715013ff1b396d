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

#include "qimg/qsim/decompose.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace qimg::qsim {
namespace {

void emit_ccx_standard(Circuit& out, int a, int b, int t) {
  auto one = [&](GateKind k, int q) { out.append(Gate::fixed(k, {q})); };
  one(GateKind::H, t);
  out.append(Gate::cx(b, t));
  one(GateKind::Tdg, t);
  out.append(Gate::cx(a, t));
  one(GateKind::T, t);
  out.append(Gate::cx(b, t));
  one(GateKind::Tdg, t);
  out.append(Gate::cx(a, t));
  one(GateKind::T, b);
  one(GateKind::T, t);
  one(GateKind::H, t);
  out.append(Gate::cx(a, b));
  one(GateKind::T, a);
  one(GateKind::Tdg, b);
  out.append(Gate::cx(a, b));
}

void emit_ccx(Circuit& out, Basis basis, int a, int b, int t) {
  if (basis == Basis::kStandard) {
    emit_ccx_standard(out, a, b, t);
  } else {
    out.append(Gate::ccx(a, b, t));
  }
}

// Toffoli ladder: ancilla j holds the AND of controls 0..j+1.
void emit_mcx(Circuit& out, Basis basis, const std::vector<int>& controls, int target,
              int first_ancilla) {
  const int k = static_cast<int>(controls.size());
  if (k == 0) {
    out.append(Gate::x(target));
    return;
  }
  if (k == 1) {
    out.append(Gate::cx(controls[0], target));
    return;
  }
  if (k == 2) {
    emit_ccx(out, basis, controls[0], controls[1], target);
    return;
  }
  auto ancilla = [&](int j) { return first_ancilla + j; };
  std::vector<std::array<int, 3>> ladder;
  ladder.push_back({controls[0], controls[1], ancilla(0)});
  for (int j = 2; j <= k - 2; ++j) ladder.push_back({controls[j], ancilla(j - 2), ancilla(j - 1)});
  for (const auto& [a, b, t] : ladder) emit_ccx(out, basis, a, b, t);
  emit_ccx(out, basis, controls[k - 1], ancilla(k - 3), target);
  for (auto it = ladder.rbegin(); it != ladder.rend(); ++it) {
    emit_ccx(out, basis, (*it)[0], (*it)[1], (*it)[2]);
  }
}

}  // namespace

int ancillas_required(const Circuit& circuit) {
  int needed = 0;
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::MCX) needed = std::max(needed, static_cast<int>(g.controls.size()) - 2);
  }
  return needed;
}

Circuit decompose(const Circuit& circuit, Basis basis) {
  const int ancillas = ancillas_required(circuit);
  Circuit out(circuit.num_qubits() + ancillas);
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::MCX:
        emit_mcx(out, basis, g.controls, g.targets[0], circuit.num_qubits());
        break;
      case GateKind::CCX:
        emit_ccx(out, basis, g.controls[0], g.controls[1], g.targets[0]);
        break;
      default:
        out.append(g);
        break;
    }
  }
  return out;
}

}  // namespace qimg::qsim
