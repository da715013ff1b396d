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
#include <stdexcept>
#include <string>

#include "qimg/imgdata/image.hpp"
#include "qimg/qsim/circuit.hpp"
#include "qimg/qsim/statevector.hpp"

namespace qimg::encoders {

class NeqrError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Readback found a position with zero or several candidate gray values.
class NeqrCorruptionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Register layout for a 2^n x 2^n image with q-bit gray levels:
///
///   qubits [0, q)        gray bits C^0 .. C^{q-1}
///   qubits [q, q + n)    x bits, least significant first
///   qubits [q + n, q+2n) y bits, least significant first
///
/// so basis index = gray | (x << q) | (y << (q + n)).
struct NeqrSpec {
  int n = 0;
  int q = 8;

  int side() const { return 1 << n; }
  int total_qubits() const { return q + 2 * n; }
  int position_qubit(int bit) const { return q + bit; }
  std::uint64_t position_of(int x, int y) const {
    return static_cast<std::uint64_t>(x) | (static_cast<std::uint64_t>(y) << n);
  }
  std::uint64_t basis_index(int x, int y, std::uint64_t gray) const {
    return gray | (position_of(x, y) << q);
  }

  /// Spec for a square power-of-two image; throws NeqrError otherwise.
  static NeqrSpec for_image(const imgdata::GrayImage& image, int q);
};

/// H on every position qubit, I markers on the gray qubits, then for each pixel
/// and each set bit i of its value an MCX from all 2n position qubits onto gray
/// qubit i, with zero-valued position bits X-conjugated around the pixel's
/// block. From |0...0> this prepares sum_{y,x} 2^{-n} |f(y,x)>|yx>.
qsim::Circuit neqr_encode(const imgdata::GrayImage& image, int q = 8);

/// Rewrites the per-pixel writes bit-plane by bit-plane: the position minterms
/// driving one gray qubit are merged pairwise while they differ in a single
/// position bit, leaving disjoint cubes that need fewer controls. Position X
/// gates are only toggled when a cube's polarity changes. The result prepares
/// the same state and is never larger than the input (the input is returned
/// unchanged if merging does not help).
///
/// Accepts circuits made of H/I layout gates, position X gates, and X/MCX
/// gates with position controls onto gray targets; throws NeqrError otherwise.
qsim::Circuit neqr_compress(const qsim::Circuit& circuit, const NeqrSpec& spec);

/// Inverse of the NEQR amplitude law: for each position picks the unique gray
/// value whose amplitude magnitude exceeds 2^{-n} - 1e-6.
imgdata::GrayImage neqr_readback(const qsim::Statevector& state, const NeqrSpec& spec);

}  // namespace qimg::encoders
