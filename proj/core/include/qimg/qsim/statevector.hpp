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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qimg::qsim {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 28;

/// Dense amplitude vector of length 2^num_qubits. Qubit 0 is the least
/// significant bit of the basis-state index.
class Statevector {
 public:
  // |0...0>.
  explicit Statevector(int num_qubits);

  static Statevector basis(int num_qubits, std::uint64_t index);
  // Takes ownership of `amplitudes`; the length must be a power of two and the
  // vector normalized within 1e-10.
  static Statevector from_amplitudes(std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }

  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  std::span<Amplitude> amplitudes() { return amplitudes_; }
  const Amplitude& operator[](std::size_t index) const { return amplitudes_[index]; }
  Amplitude& operator[](std::size_t index) { return amplitudes_[index]; }

  double norm() const;

  // Zero-pads onto a wider register; new qubits start in |0>.
  Statevector widened(int num_qubits) const;

 private:
  Statevector(int num_qubits, std::vector<Amplitude> amplitudes);

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// <a|b>.
Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b);

/// Largest |a_i - b_i| after aligning the global phase on the
/// largest-magnitude amplitude of `a`.
double max_difference_up_to_phase(const Statevector& a, const Statevector& b);

/// Largest |a_i - b_i| with no phase alignment.
double max_difference(const Statevector& a, const Statevector& b);

}  // namespace qimg::qsim
