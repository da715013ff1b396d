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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "qimg/qsim/circuit.hpp"
#include "qimg/qsim/circuit_io.hpp"
#include "qimg/qsim/decompose.hpp"
#include "qimg/qsim/simulator.hpp"

using namespace qimg::qsim;
using qimg::testing::C;

namespace {

constexpr GateKind kAllKinds[] = {GateKind::I,  GateKind::X,  GateKind::Y,   GateKind::Z,   GateKind::H,
                                  GateKind::S,  GateKind::Sdg, GateKind::T,  GateKind::Tdg, GateKind::CX,
                                  GateKind::CCX, GateKind::MCX, GateKind::RX, GateKind::RY,  GateKind::RZ,
                                  GateKind::XX, GateKind::YY, GateKind::ZZ};

std::vector<int> distinct_qubits(int n, int count, std::mt19937_64& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

Gate random_gate(GateKind kind, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
  switch (kind) {
    case GateKind::CX: {
      auto q = distinct_qubits(n, 2, rng);
      return Gate::cx(q[0], q[1]);
    }
    case GateKind::CCX: {
      auto q = distinct_qubits(n, 3, rng);
      return Gate::ccx(q[0], q[1], q[2]);
    }
    case GateKind::MCX: {
      const int controls = std::uniform_int_distribution<int>(0, n - 1)(rng);
      auto q = distinct_qubits(n, controls + 1, rng);
      const int target = q.back();
      q.pop_back();
      return Gate::mcx(q, target);
    }
    case GateKind::XX:
    case GateKind::YY:
    case GateKind::ZZ:
      return Gate::rotation(kind, distinct_qubits(n, 2, rng), angle(rng));
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return Gate::rotation(kind, distinct_qubits(n, 1, rng), angle(rng));
    default:
      return Gate::fixed(kind, distinct_qubits(n, 1, rng));
  }
}

}  // namespace

TEST(Apply, BitFlip) {
  const Statevector s = apply(Statevector(1), Gate::x(0));
  EXPECT_EQ(s[0], C(0.0));
  EXPECT_EQ(s[1], C(1.0));
}

TEST(Apply, Hadamard) {
  const Statevector s = apply(Statevector(1), Gate::h(0));
  EXPECT_NEAR(s[0].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s[1].real(), 1 / std::sqrt(2.0), 1e-15);
}

TEST(Apply, ControlUnsetIsIdentity) {
  const Statevector s = apply(Statevector(2), Gate::cx(0, 1));
  EXPECT_EQ(s[0], C(1.0));
  EXPECT_EQ(s[1] + s[2] + s[3], C(0.0));
}

TEST(Apply, MatchesDenseOracleOnFiveQubits) {
  std::mt19937_64 rng(7);
  for (GateKind kind : kAllKinds) {
    for (int trial = 0; trial < 5; ++trial) {
      const Statevector psi = qimg::testing::random_state(5, rng);
      const Gate g = random_gate(kind, 5, rng);
      const Statevector got = apply(psi, g);
      const auto want = qimg::testing::matvec(qimg::testing::gate_matrix(g, 5), psi.amplitudes());
      EXPECT_LT(qimg::testing::max_abs_diff(got.amplitudes(), want), 1e-10) << gate_name(kind);
    }
  }
}

TEST(Apply, InverseUndoes) {
  std::mt19937_64 rng(11);
  for (GateKind kind : kAllKinds) {
    const Statevector psi = qimg::testing::random_state(4, rng);
    const Gate g = random_gate(kind, 4, rng);
    Statevector s = psi;
    apply_inplace(s, g);
    apply_inverse_inplace(s, g, g.theta.value_or(0.0));
    EXPECT_LT(max_difference(s, psi), 1e-12) << gate_name(kind);
  }
}

TEST(Apply, Errors) {
  Statevector s(2);
  EXPECT_THROW(apply_inplace(s, Gate::x(2)), QubitIndexError);
  EXPECT_THROW(apply_inplace(s, Gate::parametric(GateKind::RX, {0}, 0)), ParameterError);
  EXPECT_THROW(apply_inplace(s, Gate::fixed(GateKind::CX, {0}, {0})), GateError);
  EXPECT_THROW(apply_inplace(s, Gate::fixed(GateKind::RX, {0})), ParameterError);
}

TEST(Run, EmptyCircuitIsIdentity) {
  std::mt19937_64 rng(3);
  const Statevector psi = qimg::testing::random_state(3, rng);
  EXPECT_EQ(max_difference(run(Circuit(3), psi), psi), 0.0);
}

TEST(Run, HadamardInvolution) {
  Circuit c(1);
  c.append(Gate::h(0)).append(Gate::h(0));
  const Statevector s = run(c, Statevector(1));
  EXPECT_NEAR(std::abs(s[0] - C(1.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-15);
}

TEST(Run, RxPiIsMinusIX) {
  // exp(-i pi X / 2) = -i X
  Circuit c(1);
  c.append(Gate::rotation(GateKind::RX, {0}, std::numbers::pi));
  const Statevector s = run(c, Statevector(1));
  EXPECT_NEAR(std::abs(s[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - C(0.0, -1.0)), 0.0, 1e-15);
}

TEST(Run, BindsParameterSlots) {
  Circuit c(1);
  c.append(Gate::parametric(GateKind::RY, {0}, 0));
  const std::vector<double> theta{std::numbers::pi};
  const Statevector s = run(c, Statevector(1), theta);
  EXPECT_NEAR(std::abs(s[1] - C(1.0)), 0.0, 1e-15);
  EXPECT_THROW(run(c, Statevector(1), {}), ParameterError);
}

TEST(Expectation, ComputationalAndHadamardBasis) {
  EXPECT_DOUBLE_EQ(expectation(Statevector(1), PauliObservable::single(0, Pauli::Z)), 1.0);
  EXPECT_DOUBLE_EQ(expectation(Statevector::basis(1, 1), PauliObservable::single(0, Pauli::Z)), -1.0);
  EXPECT_NEAR(expectation(apply(Statevector(1), Gate::h(0)), PauliObservable::single(0, Pauli::X)), 1.0, 1e-15);
  EXPECT_THROW(expectation(Statevector(1), PauliObservable::single(1, Pauli::Z)), QubitIndexError);
}

TEST(Expectation, MatchesDenseOracle) {
  std::mt19937_64 rng(5);
  using qimg::testing::embed;
  for (int trial = 0; trial < 20; ++trial) {
    const Statevector psi = qimg::testing::random_state(4, rng);
    PauliTerm term;
    std::vector<std::pair<int, qimg::testing::Dense>> ops;
    for (int q : distinct_qubits(4, 1 + trial % 4, rng)) {
      const auto p = static_cast<Pauli>(std::uniform_int_distribution<int>(0, 2)(rng));
      term.ops.emplace_back(q, p);
      ops.emplace_back(q, p == Pauli::X   ? qimg::testing::pauli_x()
                          : p == Pauli::Y ? qimg::testing::pauli_y()
                                          : qimg::testing::pauli_z());
    }
    const auto applied = qimg::testing::matvec(embed(4, ops), psi.amplitudes());
    const double want = inner_product(psi.amplitudes(), applied).real();
    const double got = expectation(psi, PauliObservable{{term}});
    EXPECT_NEAR(got, want, 1e-12);
    EXPECT_LE(std::abs(got), 1.0 + 1e-10);
  }
}

TEST(Properties, NormPreservedOverRandomApplications) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + i % 6;
    GateKind kind = kAllKinds[rng() % std::size(kAllKinds)];
    if (n < 3 && kind == GateKind::CCX) kind = GateKind::H;
    if (n < 2 && (kind == GateKind::CX || qimg::qsim::is_two_qubit_ising(kind))) kind = GateKind::RY;
    const Statevector s = apply(qimg::testing::random_state(n, rng), random_gate(kind, n, rng));
    ASSERT_LT(std::abs(s.norm() - 1.0), 1e-12);
  }
}

TEST(Decompose, BasisGatesUnchanged) {
  Circuit c(2);
  c.append(Gate::h(0)).append(Gate::x(1));
  EXPECT_EQ(decompose(c, Basis::kCcxLevel), c);
  EXPECT_EQ(decompose(c, Basis::kStandard), c);
}

TEST(Decompose, TwoControlMcxIsCcx) {
  Circuit c(3);
  c.append(Gate::mcx({0, 1}, 2));
  const Circuit d = decompose(c, Basis::kCcxLevel);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.gates()[0], Gate::ccx(0, 1, 2));
}

// Every computational basis input of the original register, ancillas in |0>.
void expect_equivalent_on_basis(const Circuit& original, const Circuit& decomposed) {
  const int n = original.num_qubits();
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const Statevector want = run(original, Statevector::basis(n, b)).widened(decomposed.num_qubits());
    const Statevector got = run(decomposed, Statevector::basis(decomposed.num_qubits(), b));
    ASSERT_LT(max_difference_up_to_phase(want, got), 1e-10) << "basis input " << b;
  }
}

TEST(Decompose, FourControlMcxAgreesOnAllBasisInputs) {
  Circuit c(5);
  c.append(Gate::mcx({0, 1, 2, 3}, 4));
  for (Basis basis : {Basis::kCcxLevel, Basis::kStandard}) {
    const Circuit d = decompose(c, basis);
    EXPECT_EQ(d.num_qubits(), 5 + 2);
    expect_equivalent_on_basis(c, d);
  }
  const Circuit ccx_level = decompose(c, Basis::kCcxLevel);
  for (const Gate& g : ccx_level.gates()) EXPECT_EQ(g.kind, GateKind::CCX);
  EXPECT_EQ(ccx_level.size(), 5u);
}

TEST(Decompose, StandardCcxIsExact) {
  Circuit c(3);
  c.append(Gate::ccx(0, 1, 2));
  const Circuit d = decompose(c, Basis::kStandard);
  int cx = 0;
  for (const Gate& g : d.gates()) cx += g.kind == GateKind::CX;
  EXPECT_EQ(cx, 6);
  const auto want = qimg::testing::gate_matrix(Gate::ccx(0, 1, 2), 3);
  auto got = qimg::testing::Dense::identity(8);
  for (const Gate& g : d.gates()) got = qimg::testing::gate_matrix(g, 3) * got;
  EXPECT_LT(qimg::testing::max_abs_diff(got.a, want.a), 1e-12);
}

TEST(Properties, RandomMcxCircuitsDecomposeEquivalently) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 5;  // up to 7 qubits -> MCX with up to 6 controls
    Circuit c(n);
    for (int k = 0; k < 6; ++k) {
      const GateKind kind = (k % 2 == 0) ? GateKind::MCX : kAllKinds[rng() % 9];
      c.append(random_gate(kind, n, rng));
    }
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 1);
    c.append(Gate::mcx(rest, 0));
    for (Basis basis : {Basis::kCcxLevel, Basis::kStandard}) expect_equivalent_on_basis(c, decompose(c, basis));
  }
}

TEST(Depth, Examples) {
  EXPECT_EQ(circuit_depth(Circuit(3)), 0u);
  EXPECT_EQ(circuit_size(Circuit(3)), 0u);
  Circuit c(2);
  c.append(Gate::h(0)).append(Gate::h(1)).append(Gate::cx(0, 1));
  EXPECT_EQ(circuit_depth(c), 2u);
  EXPECT_EQ(circuit_size(c), 3u);
}

TEST(Properties, DepthNeverExceedsSize) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    Circuit c(4);
    const int gates = trial % 12;
    for (int k = 0; k < gates; ++k) c.append(random_gate(kAllKinds[rng() % std::size(kAllKinds)], 4, rng));
    EXPECT_LE(circuit_depth(c), circuit_size(c));
  }
}

TEST(CircuitText, RoundTripsRandomCircuits) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    Circuit c(5);
    for (int k = 0; k < 15; ++k) c.append(random_gate(kAllKinds[rng() % std::size(kAllKinds)], 5, rng));
    c.append(Gate::parametric(GateKind::ZZ, {0, 4}, trial % 3));
    EXPECT_EQ(circuit_from_text(circuit_to_text(c)), c);
  }
}

TEST(CircuitText, Format) {
  Circuit c(3);
  c.append(Gate::mcx({0, 1}, 2)).append(Gate::parametric(GateKind::XX, {0, 2}, 0));
  EXPECT_EQ(circuit_to_text(c), "qubits 3 params 1\nMCX 2 | 0 1 | -\nXX 0 2 | | p0\n");
  EXPECT_EQ(circuit_to_text(Circuit(4)), "qubits 4 params 0\n");
  EXPECT_THROW(circuit_from_text(""), CircuitFormatError);
  EXPECT_THROW(circuit_from_text("qubits 2 params 0\nFOO 0 | | -\n"), CircuitFormatError);
  EXPECT_THROW(circuit_from_text("qubits 2 params 0\nX 5 | | -\n"), CircuitFormatError);
  EXPECT_THROW(circuit_from_text("qubits 2 params 3\nRX 0 | | p0\n"), CircuitFormatError);
}
