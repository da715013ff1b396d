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

#include "qimg/qsim/simulator.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace qimg::qsim {
namespace {

using Index = std::uint64_t;

constexpr Amplitude kI{0.0, 1.0};

inline Index insert_zero_bit(Index value, int bit) {
  const Index low = value & ((Index{1} << bit) - 1);
  return ((value >> bit) << (bit + 1)) | low;
}

inline Index insert_two_zero_bits(Index value, int lo, int hi) {
  return insert_zero_bit(insert_zero_bit(value, lo), hi);
}

Index mask_of(const std::vector<int>& qubits) {
  Index m = 0;
  for (int q : qubits) m |= Index{1} << q;
  return m;
}

// [[m00, m01], [m10, m11]] on `target`, gated on all bits of `controls` set.
void apply_matrix(std::span<Amplitude> amps, int target, Amplitude m00, Amplitude m01,
                  Amplitude m10, Amplitude m11, Index controls) {
  const Index half = amps.size() / 2;
  const Index bit = Index{1} << target;
  for (Index k = 0; k < half; ++k) {
    const Index i0 = insert_zero_bit(k, target);
    if ((i0 & controls) != controls) continue;
    const Index i1 = i0 | bit;
    const Amplitude a0 = amps[i0];
    const Amplitude a1 = amps[i1];
    amps[i0] = m00 * a0 + m01 * a1;
    amps[i1] = m10 * a0 + m11 * a1;
  }
}

void apply_flip(std::span<Amplitude> amps, int target, Index controls) {
  const Index half = amps.size() / 2;
  const Index bit = Index{1} << target;
  for (Index k = 0; k < half; ++k) {
    const Index i0 = insert_zero_bit(k, target);
    if ((i0 & controls) != controls) continue;
    std::swap(amps[i0], amps[i0 | bit]);
  }
}

void apply_phase(std::span<Amplitude> amps, int target, Amplitude p0, Amplitude p1) {
  const Index bit = Index{1} << target;
  for (Index i = 0; i < amps.size(); ++i) amps[i] *= (i & bit) ? p1 : p0;
}

// exp(-i*angle/2 * P(x)P) for P in {X, Y}: couples i with i ^ (ba|bb).
void apply_ising_offdiagonal(std::span<Amplitude> amps, int a, int b, double angle, bool is_yy) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  const Index flip = (Index{1} << a) | (Index{1} << b);
  const Index bb = Index{1} << b;
  const Index quarter = amps.size() / 4;
  const int lo = std::min(a, b);
  const int hi = std::max(a, b);
  // Enumerate i with bit a clear; bit b takes both values.
  for (Index k = 0; k < quarter; ++k) {
    const Index base = insert_two_zero_bits(k, lo, hi);
    for (Index i : {base, base | bb}) {
      const Index j = i ^ flip;
      // Y(x)Y gives -1 on equal bit pairs, +1 on differing ones.
      const double sign = (!is_yy || (i & bb)) ? 1.0 : -1.0;
      const Amplitude coupling = -kI * (s * sign);
      const Amplitude ai = amps[i];
      const Amplitude aj = amps[j];
      amps[i] = c * ai + coupling * aj;
      amps[j] = c * aj + coupling * ai;
    }
  }
}

void apply_zz(std::span<Amplitude> amps, int a, int b, double angle) {
  const Amplitude same = std::polar(1.0, -angle / 2);
  const Amplitude differ = std::polar(1.0, angle / 2);
  for (Index i = 0; i < amps.size(); ++i) {
    const bool parity = (((i >> a) ^ (i >> b)) & 1U) != 0;
    amps[i] *= parity ? differ : same;
  }
}

void apply_unchecked(std::span<Amplitude> amps, const Gate& g, double angle) {
  const double r = 1.0 / std::numbers::sqrt2;
  const int t = g.targets.front();
  switch (g.kind) {
    case GateKind::I:
      return;
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX:
      apply_flip(amps, t, mask_of(g.controls));
      return;
    case GateKind::Y:
      apply_matrix(amps, t, 0.0, -kI, kI, 0.0, 0);
      return;
    case GateKind::Z:
      apply_phase(amps, t, 1.0, -1.0);
      return;
    case GateKind::H:
      apply_matrix(amps, t, r, r, r, -r, 0);
      return;
    case GateKind::S:
      apply_phase(amps, t, 1.0, kI);
      return;
    case GateKind::Sdg:
      apply_phase(amps, t, 1.0, -kI);
      return;
    case GateKind::T:
      apply_phase(amps, t, 1.0, std::polar(1.0, std::numbers::pi / 4));
      return;
    case GateKind::Tdg:
      apply_phase(amps, t, 1.0, std::polar(1.0, -std::numbers::pi / 4));
      return;
    case GateKind::RX: {
      const double c = std::cos(angle / 2);
      const Amplitude s = -kI * std::sin(angle / 2);
      apply_matrix(amps, t, c, s, s, c, 0);
      return;
    }
    case GateKind::RY: {
      const double c = std::cos(angle / 2);
      const double s = std::sin(angle / 2);
      apply_matrix(amps, t, c, -s, s, c, 0);
      return;
    }
    case GateKind::RZ:
      apply_phase(amps, t, std::polar(1.0, -angle / 2), std::polar(1.0, angle / 2));
      return;
    case GateKind::XX:
      apply_ising_offdiagonal(amps, g.targets[0], g.targets[1], angle, false);
      return;
    case GateKind::YY:
      apply_ising_offdiagonal(amps, g.targets[0], g.targets[1], angle, true);
      return;
    case GateKind::ZZ:
      apply_zz(amps, g.targets[0], g.targets[1], angle);
      return;
  }
}

GateKind inverse_kind(GateKind kind) {
  switch (kind) {
    case GateKind::S:
      return GateKind::Sdg;
    case GateKind::Sdg:
      return GateKind::S;
    case GateKind::T:
      return GateKind::Tdg;
    case GateKind::Tdg:
      return GateKind::T;
    default:
      return kind;
  }
}

void check_register(const Statevector& state, int width) {
  if (width > state.num_qubits()) {
    throw QubitIndexError("circuit on " + std::to_string(width) + " qubits applied to a " +
                          std::to_string(state.num_qubits()) + "-qubit state");
  }
}

struct PauliMasks {
  Index flip = 0;   // X or Y
  Index sign = 0;   // Y or Z
  int y_count = 0;
};

PauliMasks masks_of(const PauliTerm& term, int num_qubits) {
  PauliMasks m;
  Index seen = 0;
  for (const auto& [q, p] : term.ops) {
    if (q < 0 || q >= num_qubits) {
      throw QubitIndexError("Pauli on qubit " + std::to_string(q) + " outside register of " +
                            std::to_string(num_qubits));
    }
    const Index bit = Index{1} << q;
    if (seen & bit) throw GateError("Pauli string repeats qubit " + std::to_string(q));
    seen |= bit;
    if (p != Pauli::Z) m.flip |= bit;
    if (p != Pauli::X) m.sign |= bit;
    if (p == Pauli::Y) ++m.y_count;
  }
  return m;
}

Amplitude i_power(int k) {
  switch (k & 3) {
    case 0:
      return 1.0;
    case 1:
      return kI;
    case 2:
      return -1.0;
    default:
      return -kI;
  }
}

}  // namespace

double resolve_angle(const Gate& gate, std::span<const double> theta) {
  if (gate.theta) return *gate.theta;
  if (gate.param_id) {
    const auto slot = static_cast<std::size_t>(*gate.param_id);
    if (slot >= theta.size()) {
      throw ParameterError("parameter slot " + std::to_string(slot) + " unbound (" +
                           std::to_string(theta.size()) + " values supplied)");
    }
    return theta[slot];
  }
  if (is_rotation(gate.kind)) {
    throw ParameterError(std::string(gate_name(gate.kind)) + " has neither theta nor a parameter slot");
  }
  return 0.0;
}

void apply_inplace(Statevector& state, const Gate& gate, double angle) {
  validate_gate(gate, state.num_qubits());
  apply_unchecked(state.amplitudes(), gate, angle);
}

void apply_inplace(Statevector& state, const Gate& gate) {
  validate_gate(gate, state.num_qubits());
  apply_unchecked(state.amplitudes(), gate, resolve_angle(gate, {}));
}

void apply_inverse_inplace(Statevector& state, const Gate& gate, double angle) {
  validate_gate(gate, state.num_qubits());
  Gate inverse = gate;
  inverse.kind = inverse_kind(gate.kind);
  apply_unchecked(state.amplitudes(), inverse, -angle);
}

Statevector apply(Statevector state, const Gate& gate) {
  apply_inplace(state, gate);
  return state;
}

void run_inplace(const Circuit& circuit, Statevector& state, std::span<const double> theta) {
  check_register(state, circuit.num_qubits());
  if (theta.size() != static_cast<std::size_t>(circuit.num_params())) {
    throw ParameterError("circuit has " + std::to_string(circuit.num_params()) +
                         " parameter slots, got " + std::to_string(theta.size()) + " values");
  }
  for (const Gate& g : circuit.gates()) apply_unchecked(state.amplitudes(), g, resolve_angle(g, theta));
}

Statevector run(const Circuit& circuit, Statevector initial, std::span<const double> theta) {
  run_inplace(circuit, initial, theta);
  return initial;
}

void apply_pauli_string(Statevector& state, const PauliTerm& term) {
  const PauliMasks m = masks_of(term, state.num_qubits());
  const Amplitude global = i_power(m.y_count);
  auto amps = state.amplitudes();
  auto phase = [&](Index i) {
    return (std::popcount(i & m.sign) & 1) ? -global : global;
  };
  if (m.flip == 0) {
    for (Index i = 0; i < amps.size(); ++i) amps[i] *= phase(i);
    return;
  }
  const int pivot = std::countr_zero(m.flip);
  const Index half = amps.size() / 2;
  for (Index k = 0; k < half; ++k) {
    const Index i = insert_zero_bit(k, pivot);
    const Index j = i ^ m.flip;
    const Amplitude ai = amps[i];
    const Amplitude aj = amps[j];
    amps[j] = phase(i) * ai;
    amps[i] = phase(j) * aj;
  }
}

Amplitude pauli_matrix_element(std::span<const Amplitude> bra, std::span<const Amplitude> ket,
                               const PauliTerm& term, int num_qubits) {
  const PauliMasks m = masks_of(term, num_qubits);
  double re = 0.0;
  double im = 0.0;
  for (Index i = 0; i < ket.size(); ++i) {
    const Amplitude b = bra[i ^ m.flip];
    const Amplitude k = ket[i];
    double pr = b.real() * k.real() + b.imag() * k.imag();
    double pi = b.real() * k.imag() - b.imag() * k.real();
    if (std::popcount(i & m.sign) & 1) {
      pr = -pr;
      pi = -pi;
    }
    re += pr;
    im += pi;
  }
  return i_power(m.y_count) * Amplitude{re, im};
}

double expectation(const Statevector& state, const PauliObservable& observable) {
  Amplitude total{0.0, 0.0};
  for (const PauliTerm& term : observable.terms) {
    total += term.coefficient *
             pauli_matrix_element(state.amplitudes(), state.amplitudes(), term, state.num_qubits());
  }
  if (std::abs(total.imag()) >= 1e-10) {
    throw SimulationError("expectation has imaginary residue " + std::to_string(total.imag()));
  }
  return total.real();
}

}  // namespace qimg::qsim
