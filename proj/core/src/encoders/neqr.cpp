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

#include "qimg/encoders/neqr.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace qimg::encoders {

using qsim::Circuit;
using qsim::Gate;
using qsim::GateKind;

NeqrSpec NeqrSpec::for_image(const imgdata::GrayImage& image, int q) {
  if (image.width != image.height) {
    throw NeqrError("NEQR needs a square image, got " + std::to_string(image.width) + "x" +
                    std::to_string(image.height));
  }
  if (image.width < 1 || !std::has_single_bit(static_cast<unsigned>(image.width))) {
    throw NeqrError("NEQR image side " + std::to_string(image.width) + " is not a power of two");
  }
  if (q < 1 || q > 16) throw NeqrError("gray bit depth q=" + std::to_string(q) + " outside [1, 16]");
  return NeqrSpec{std::countr_zero(static_cast<unsigned>(image.width)), q};
}

namespace {

void emit_layout(Circuit& c, const NeqrSpec& spec) {
  for (int b = 0; b < 2 * spec.n; ++b) c.append(Gate::h(spec.position_qubit(b)));
  for (int i = 0; i < spec.q; ++i) c.append(Gate::i(i));
}

std::vector<int> position_controls(const NeqrSpec& spec, std::uint64_t care) {
  std::vector<int> controls;
  for (int b = 0; b < 2 * spec.n; ++b) {
    if ((care >> b) & 1U) controls.push_back(spec.position_qubit(b));
  }
  return controls;
}

// A set of position minterms expressed as value/care over the 2n position bits.
struct Cube {
  std::uint64_t value = 0;
  std::uint64_t care = 0;
  auto operator<=>(const Cube&) const = default;
};

// Pairs cubes with equal care masks differing in exactly one care bit until no
// pair remains. Merged cubes cover exactly their two halves, so the output
// stays a disjoint partition of the input minterms.
std::vector<Cube> merge_minterms(const std::vector<std::uint64_t>& minterms, std::uint64_t full) {
  std::map<std::uint64_t, std::set<std::uint64_t>> groups;  // care -> values
  for (std::uint64_t m : minterms) groups[full].insert(m);
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::uint64_t, std::set<std::uint64_t>> next;
    for (auto& [care, values] : groups) {
      for (std::uint64_t rest = care; rest != 0; rest &= rest - 1) {
        const std::uint64_t bit = rest & (~rest + 1);
        for (auto it = values.begin(); it != values.end();) {
          const std::uint64_t v = *it;
          if ((v & bit) == 0) {
            auto partner = values.find(v | bit);
            if (partner != values.end()) {
              values.erase(partner);
              it = values.erase(it);
              next[care & ~bit].insert(v);
              changed = true;
              continue;
            }
          }
          ++it;
        }
      }
      next[care].insert(values.begin(), values.end());
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.empty(); });
    groups = std::move(next);
  }
  std::vector<Cube> cubes;
  for (const auto& [care, values] : groups) {
    for (std::uint64_t v : values) cubes.push_back(Cube{v, care});
  }
  return cubes;
}

// Gray-plane membership recovered from a preparation circuit: plane[i][p] is
// true when gray bit i is flipped for position p.
std::vector<std::vector<bool>> extract_planes(const Circuit& circuit, const NeqrSpec& spec) {
  const int pos_bits = 2 * spec.n;
  const std::uint64_t positions = std::uint64_t{1} << pos_bits;
  std::vector<std::vector<bool>> planes(spec.q, std::vector<bool>(positions, false));
  std::uint64_t flips = 0;
  auto is_position = [&](int qubit) { return qubit >= spec.q && qubit < spec.q + pos_bits; };
  auto bad = [](const std::string& why) { return NeqrError("not an NEQR preparation circuit: " + why); };

  if (circuit.num_qubits() != spec.total_qubits()) {
    throw bad("register has " + std::to_string(circuit.num_qubits()) + " qubits, layout needs " +
              std::to_string(spec.total_qubits()));
  }
  for (const Gate& g : circuit.gates()) {
    const int target = g.targets.front();
    switch (g.kind) {
      case GateKind::H:
        if (!is_position(target)) throw bad("H on a gray qubit");
        break;
      case GateKind::I:
        break;
      case GateKind::X:
      case GateKind::CX:
      case GateKind::CCX:
      case GateKind::MCX: {
        if (is_position(target)) {
          if (!g.controls.empty()) throw bad("controlled gate onto a position qubit");
          flips ^= std::uint64_t{1} << (target - spec.q);
          break;
        }
        std::uint64_t care = 0;
        for (int c : g.controls) {
          if (!is_position(c)) throw bad("control on a gray qubit");
          care |= std::uint64_t{1} << (c - spec.q);
        }
        // Controls fire when the flipped bit reads 1.
        const std::uint64_t want = ~flips & care;
        for (std::uint64_t p = 0; p < positions; ++p) {
          if ((p & care) == want) planes[target][p] = !planes[target][p];
        }
        break;
      }
      default:
        throw bad(std::string("unexpected ") + std::string(qsim::gate_name(g.kind)));
    }
  }
  if (flips != 0) throw bad("position X gates are not balanced");
  return planes;
}

}  // namespace

Circuit neqr_encode(const imgdata::GrayImage& image, int q) {
  const NeqrSpec spec = NeqrSpec::for_image(image, q);
  const std::uint64_t limit = std::uint64_t{1} << q;
  Circuit c(spec.total_qubits());
  emit_layout(c, spec);
  const std::vector<int> all_positions = position_controls(spec, (std::uint64_t{1} << (2 * spec.n)) - 1);
  for (int y = 0; y < spec.side(); ++y) {
    for (int x = 0; x < spec.side(); ++x) {
      const std::uint64_t value = image.at(x, y);
      if (value >= limit) {
        throw NeqrError("pixel (" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                        std::to_string(value) + " needs more than " + std::to_string(q) + " bits");
      }
      if (value == 0) continue;
      const std::uint64_t pos = spec.position_of(x, y);
      std::vector<int> zeros;
      for (int b = 0; b < 2 * spec.n; ++b) {
        if (((pos >> b) & 1U) == 0) zeros.push_back(spec.position_qubit(b));
      }
      for (int z : zeros) c.append(Gate::x(z));
      for (int i = 0; i < q; ++i) {
        if ((value >> i) & 1U) c.append(Gate::mcx(all_positions, i));
      }
      for (int z : zeros) c.append(Gate::x(z));
    }
  }
  return c;
}

Circuit neqr_compress(const Circuit& circuit, const NeqrSpec& spec) {
  const int pos_bits = 2 * spec.n;
  const std::uint64_t full = (std::uint64_t{1} << pos_bits) - 1;
  const auto planes = extract_planes(circuit, spec);

  // Cube -> gray targets it drives; cubes shared by several planes reuse one
  // polarity setup.
  std::map<Cube, std::vector<int>> writes;
  for (int i = 0; i < spec.q; ++i) {
    std::vector<std::uint64_t> minterms;
    for (std::uint64_t p = 0; p <= full; ++p) {
      if (planes[i][p]) minterms.push_back(p);
    }
    for (const Cube& cube : merge_minterms(minterms, full)) writes[cube].push_back(i);
  }

  Circuit out(spec.total_qubits());
  emit_layout(out, spec);
  std::uint64_t flips = 0;
  auto toggle = [&](std::uint64_t bits) {
    for (int b = 0; b < pos_bits; ++b) {
      if ((bits >> b) & 1U) out.append(Gate::x(spec.position_qubit(b)));
    }
    flips ^= bits;
  };
  for (const auto& [cube, targets] : writes) {
    // Care bits must read 1: flipped exactly where the cube wants a 0.
    const std::uint64_t want_flips = ~cube.value & cube.care;
    toggle((flips ^ want_flips) & cube.care);
    const std::vector<int> controls = position_controls(spec, cube.care);
    for (int t : targets) {
      out.append(controls.empty() ? Gate::x(t) : Gate::mcx(controls, t));
    }
  }
  toggle(flips);
  if (out.size() > circuit.size()) return circuit;
  return out;
}

imgdata::GrayImage neqr_readback(const qsim::Statevector& state, const NeqrSpec& spec) {
  if (state.num_qubits() != spec.total_qubits()) {
    throw NeqrError("state has " + std::to_string(state.num_qubits()) + " qubits, layout needs " +
                    std::to_string(spec.total_qubits()));
  }
  const double threshold = std::ldexp(1.0, -spec.n) - 1e-6;
  const std::uint64_t levels = std::uint64_t{1} << spec.q;
  std::vector<std::uint8_t> pixels(static_cast<std::size_t>(spec.side()) * spec.side());
  for (int y = 0; y < spec.side(); ++y) {
    for (int x = 0; x < spec.side(); ++x) {
      int hits = 0;
      std::uint64_t found = 0;
      for (std::uint64_t g = 0; g < levels; ++g) {
        if (std::abs(state[spec.basis_index(x, y, g)]) > threshold) {
          ++hits;
          found = g;
        }
      }
      if (hits != 1) {
        throw NeqrCorruptionError("position (" + std::to_string(x) + "," + std::to_string(y) + ") has " +
                                  std::to_string(hits) + " gray candidates");
      }
      if (found > 255) throw NeqrCorruptionError("gray value " + std::to_string(found) + " exceeds 8 bits");
      pixels[static_cast<std::size_t>(y) * spec.side() + x] = static_cast<std::uint8_t>(found);
    }
  }
  return imgdata::GrayImage(spec.side(), spec.side(), std::move(pixels));
}

}  // namespace qimg::encoders
