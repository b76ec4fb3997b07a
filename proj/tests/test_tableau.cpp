// Copyright 2026 The qemlab Authors
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

#include <doctest.h>

#include <bit>
#include <cmath>
#include <map>

#include "qemlab/circuit_ops.hpp"
#include "qemlab/tableau.hpp"
#include "support/dense_oracle.hpp"

using namespace qem;
using test::CMat;

namespace {

PauliString random_pauli(uint32_t n, Rng& rng) {
  PauliString p = PauliString::identity(n);
  p.x = rng.bits(n);
  p.z = rng.bits(n);
  p.phase_exp = static_cast<uint8_t>(rng.uniform(4));
  return p;
}

// Dense conjugation U P U^dagger for one gate.
bool conj_matches_dense(const Gate& g, const PauliString& p, uint32_t n) {
  const PauliString got = conjugate_by_gate(p, g, n);
  const CMat u = test::gate_matrix(g, n);
  const CMat expect = test::mul(test::mul(u, test::pauli_matrix(p)), test::dagger(u));
  return test::approx_equal(test::pauli_matrix(got), expect, 1e-10);
}

Circuit circuit_of_ops(uint32_t n, const std::vector<CliffordOp>& ops) {
  Circuit c;
  c.n_data = n;
  c.gates = ops_to_gates(ops);
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("tableau");

TEST_CASE("stabilizer identities: H maps Z to X, CX spreads X and keeps Z") {
  CHECK(to_string(conj_h(parse_pauli("Z"), 0)) == "X");
  CHECK(to_string(conj_h(parse_pauli("X"), 0)) == "Z");
  CHECK(to_string(conj_cx(parse_pauli("XI"), 0, 1)) == "XX");
  CHECK(to_string(conj_cx(parse_pauli("ZI"), 0, 1)) == "ZI");
  CHECK(to_string(conj_cx(parse_pauli("IZ"), 0, 1)) == "ZZ");
}

TEST_CASE("elementary conjugations match dense conjugation, exhaustive on 2 qubits") {
  std::vector<Gate> gates = {
      Gate::one(GateKind::H, 0),    Gate::one(GateKind::S, 1),
      Gate::one(GateKind::Sdg, 0),  Gate::one(GateKind::X, 1),
      Gate::one(GateKind::Y, 0),    Gate::one(GateKind::Z, 1),
      Gate::two(GateKind::CX, 0, 1), Gate::two(GateKind::CX, 1, 0),
      Gate::two(GateKind::CZ, 0, 1), Gate::two(GateKind::Swap, 0, 1),
  };
  for (const auto& g : gates) {
    for (uint64_t bits = 0; bits < 16; ++bits) {
      for (uint8_t phase = 0; phase < 4; ++phase) {
        PauliString p = PauliString::identity(2);
        p.x = bits & 3;
        p.z = bits >> 2;
        p.phase_exp = phase;
        REQUIRE(conj_matches_dense(g, p, 2));
      }
    }
  }
}

TEST_CASE("rotation conjugation at Clifford angles matches dense") {
  Rng rng(0x5eed10);
  const double half_pi = 1.5707963267948966;
  for (const GateKind kind : {GateKind::Rx, GateKind::Ry, GateKind::Rz}) {
    for (int quarter = 0; quarter <= 4; ++quarter) {
      const Gate g = Gate::rotation(kind, 1, quarter * half_pi);
      for (int rep = 0; rep < 12; ++rep) {
        REQUIRE(conj_matches_dense(g, random_pauli(3, rng), 3));
      }
    }
  }
  CHECK_THROWS_AS(
      conjugate_by_gate(parse_pauli("X"), Gate::rotation(GateKind::Rz, 0, 0.3), 1),
      std::domain_error);
}

TEST_CASE("controlled-Pauli conjugation matches dense for weights 1..3") {
  Rng rng(0x5eed11);
  for (int rep = 0; rep < 60; ++rep) {
    const uint32_t n = 4;  // qubit 3 is the control
    PauliString body = PauliString::identity(3);
    while (body.is_identity_up_to_phase()) {
      body.x = rng.bits(3);
      body.z = rng.bits(3);
    }
    body.phase_exp =
        static_cast<uint8_t>((std::popcount(body.x & body.z) + 2 * rng.bit()) & 3);
    const Gate g = Gate::cpauli(3, body);
    REQUIRE(conj_matches_dense(g, random_pauli(n, rng), n));
  }
}

TEST_CASE("tableau conjugation is multiplicative") {
  Rng rng(0x5eed12);
  for (int rep = 0; rep < 20; ++rep) {
    const CliffordTableau t = random_clifford(3, rng);
    const PauliString p = random_pauli(3, rng);
    const PauliString q = random_pauli(3, rng);
    const PauliString lhs = t.conjugate(multiply(p, q));
    const PauliString rhs = multiply(t.conjugate(p), t.conjugate(q));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("conjugation preserves commutation") {
  Rng rng(0x5eed13);
  for (int rep = 0; rep < 40; ++rep) {
    const CliffordTableau t = random_clifford(4, rng);
    const PauliString p = random_pauli(4, rng);
    const PauliString q = random_pauli(4, rng);
    REQUIRE(commutes(p, q) == commutes(t.conjugate(p), t.conjugate(q)));
  }
}

TEST_CASE("compose with inverse is the identity tableau and a group action") {
  Rng rng(0x5eed14);
  for (uint32_t n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 8; ++rep) {
      const CliffordTableau t = random_clifford(n, rng);
      const CliffordTableau inv = t.inverse();
      CHECK(t.compose(inv) == CliffordTableau::identity(n));
      CHECK(inv.compose(t) == CliffordTableau::identity(n));
      const PauliString p = random_pauli(n, rng);
      CHECK(inv.conjugate(t.conjugate(p)) == p);
    }
  }
}

TEST_CASE("sampled tableau agrees with the dense unitary of its circuit") {
  Rng rng(0x5eed15);
  for (uint32_t n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 6; ++rep) {
      const SampledClifford sc = sample_random_clifford(n, rng);
      const Circuit c = circuit_of_ops(n, sc.ops);
      const CMat u = test::circuit_unitary(c);
      for (int probe = 0; probe < 6; ++probe) {
        const PauliString p = random_pauli(n, rng);
        const CMat expect =
            test::mul(test::mul(u, test::pauli_matrix(p)), test::dagger(u));
        REQUIRE(test::approx_equal(test::pauli_matrix(sc.tableau.conjugate(p)),
                                   expect, 1e-10));
      }
    }
  }
}

TEST_CASE("random_clifford is deterministic given the seed") {
  Rng a(42), b(42);
  const CliffordTableau ta = random_clifford(3, a);
  const CliffordTableau tb = random_clifford(3, b);
  CHECK(ta == tb);
  const CliffordTableau tc = random_clifford(3, a);
  CHECK_FALSE(ta == tc);
}

TEST_CASE("random_clifford rejects n = 0") {
  Rng rng(1);
  CHECK_THROWS_AS(random_clifford(0, rng), std::invalid_argument);
}

TEST_CASE("sampled tableaux always satisfy the symplectic invariants") {
  Rng rng(0x5eed16);
  for (int rep = 0; rep < 200; ++rep) {
    REQUIRE(random_clifford(2, rng).valid());
  }
  for (int rep = 0; rep < 40; ++rep) {
    REQUIRE(random_clifford(5, rng).valid());
  }
}

TEST_CASE("single-qubit sampling is uniform over the 24 Cliffords") {
  // 1e5 draws over 24 classes; every class count within 4 sigma multinomial.
  Rng rng(0x5eed17);
  const int draws = 100000;
  std::map<std::vector<uint8_t>, int> counts;
  for (int i = 0; i < draws; ++i) {
    counts[random_clifford(1, rng).key()] += 1;
  }
  CHECK(counts.size() == 24);
  const double expect = draws / 24.0;
  const double sigma = std::sqrt(draws * (1.0 / 24) * (23.0 / 24));
  for (const auto& [key, count] : counts) {
    REQUIRE(std::abs(count - expect) <= 4 * sigma);
  }
}

TEST_CASE("clifford_tableau_of agrees with dense conjugation for n <= 3") {
  Rng rng(0x5eed18);
  for (uint32_t n = 2; n <= 3; ++n) {
    const Circuit c = random_clifford_circuit(n, 12, 0xabc + n);
    const CliffordTableau t = clifford_tableau_of(c);
    const CMat u = test::circuit_unitary(c);
    for (int probe = 0; probe < 10; ++probe) {
      const PauliString p = random_pauli(n, rng);
      const CMat expect =
          test::mul(test::mul(u, test::pauli_matrix(p)), test::dagger(u));
      REQUIRE(test::approx_equal(test::pauli_matrix(t.conjugate(p)), expect, 1e-10));
    }
  }
}

TEST_SUITE_END();
