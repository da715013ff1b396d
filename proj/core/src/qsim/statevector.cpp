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

#include "qimg/qsim/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "qimg/qsim/gate.hpp"

namespace qimg::qsim {
namespace {

void check_width(int num_qubits) {
  if (num_qubits < 0 || num_qubits > kMaxQubits) {
    throw QubitIndexError("register width " + std::to_string(num_qubits) + " outside [0, " +
                          std::to_string(kMaxQubits) + "]");
  }
}

}  // namespace

Statevector::Statevector(int num_qubits) : num_qubits_(num_qubits) {
  check_width(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

Statevector::Statevector(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

Statevector Statevector::basis(int num_qubits, std::uint64_t index) {
  Statevector s(num_qubits);
  if (index >= s.dim()) {
    throw QubitIndexError("basis index " + std::to_string(index) + " outside dimension " +
                          std::to_string(s.dim()));
  }
  s.amplitudes_[0] = 0.0;
  s.amplitudes_[index] = 1.0;
  return s;
}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n == 0 || !std::has_single_bit(n)) {
    throw std::invalid_argument("amplitude count " + std::to_string(n) + " is not a power of two");
  }
  const int width = std::countr_zero(n);
  check_width(width);
  Statevector s(width, std::move(amplitudes));
  if (std::abs(s.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("amplitudes are not normalized");
  }
  return s;
}

double Statevector::norm() const {
  double sum = 0.0;
  for (const Amplitude& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

Statevector Statevector::widened(int num_qubits) const {
  if (num_qubits < num_qubits_) throw QubitIndexError("cannot narrow a statevector");
  check_width(num_qubits);
  std::vector<Amplitude> amps(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  std::copy(amplitudes_.begin(), amplitudes_.end(), amps.begin());
  return Statevector(num_qubits, std::move(amps));
}

Amplitude inner_product(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  if (a.size() != b.size()) throw std::invalid_argument("inner product of unequal lengths");
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    // conj(a) * b
    re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
  }
  return {re, im};
}

double max_difference(const Statevector& a, const Statevector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("statevectors differ in width");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double max_difference_up_to_phase(const Statevector& a, const Statevector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("statevectors differ in width");
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < a.dim(); ++i) {
    if (std::abs(a[i]) > std::abs(a[pivot])) pivot = i;
  }
  Amplitude phase{1.0, 0.0};
  if (std::abs(b[pivot]) > 0.0 && std::abs(a[pivot]) > 0.0) {
    phase = (a[pivot] / std::abs(a[pivot])) / (b[pivot] / std::abs(b[pivot]));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) worst = std::max(worst, std::abs(a[i] - phase * b[i]));
  return worst;
}

}  // namespace qimg::qsim
