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

#include "qemlab/pauli.hpp"
#include "qemlab/rng.hpp"
#include "support/dense_oracle.hpp"

using namespace qem;
using test::CMat;

namespace {

PauliString random_pauli(uint32_t n, Rng& rng, bool random_phase = true) {
  PauliString p = PauliString::identity(n);
  p.x = rng.bits(n);
  p.z = rng.bits(n);
  p.phase_exp = random_phase ? static_cast<uint8_t>(rng.uniform(4)) : 0;
  return p;
}

bool matrices_commute(const PauliString& p, const PauliString& q) {
  const CMat mp = test::pauli_matrix(p);
  const CMat mq = test::pauli_matrix(q);
  return test::frobenius(test::sub(test::mul(mp, mq), test::mul(mq, mp))) < 1e-12;
}

}  // namespace

TEST_SUITE_BEGIN("pauli");

TEST_CASE("multiply involution: X*X = I with phase +1") {
  const PauliString x = parse_pauli("X");
  const PauliString r = multiply(x, x);
  CHECK(r.is_identity());
}

TEST_CASE("multiply phases against the dense 2x2 oracle: Z*X = iY") {
  const PauliString z = parse_pauli("Z");
  const PauliString x = parse_pauli("X");
  const PauliString r = multiply(z, x);
  CHECK(to_string(r) == "+iY");
  CHECK(test::approx_equal(test::pauli_matrix(r),
                           test::mul(test::pauli_matrix(z), test::pauli_matrix(x)),
                           1e-12));
}

TEST_CASE("documented convention: X*Z = -iY") {
  const PauliString r = multiply(parse_pauli("X"), parse_pauli("Z"));
  CHECK(to_string(r) == "-iY");
}

TEST_CASE("two-qubit product against the dense 4x4 oracle") {
  const PauliString p = parse_pauli("XZ");  // X on qubit 0, Z on qubit 1
  const PauliString q = parse_pauli("ZZ");
  const PauliString r = multiply(p, q);
  CHECK(test::approx_equal(test::pauli_matrix(r),
                           test::mul(test::pauli_matrix(p), test::pauli_matrix(q)),
                           1e-12));
  CHECK(to_string(r) == "-iYI");
}

TEST_CASE("random products match the dense oracle up to 4 qubits") {
  Rng rng(0x5eed01);
  for (uint32_t n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      const PauliString p = random_pauli(n, rng);
      const PauliString q = random_pauli(n, rng);
      const PauliString r = multiply(p, q);
      REQUIRE(test::approx_equal(
          test::pauli_matrix(r),
          test::mul(test::pauli_matrix(p), test::pauli_matrix(q)), 1e-12));
    }
  }
}

TEST_CASE("multiply rejects size mismatch") {
  CHECK_THROWS_AS(multiply(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
  CHECK_THROWS_AS(commutes(parse_pauli("X"), parse_pauli("XX")), std::invalid_argument);
}

TEST_CASE("commutes: anticommuting and doubly-anticommuting pairs") {
  CHECK_FALSE(commutes(parse_pauli("X"), parse_pauli("Z")));
  CHECK(commutes(parse_pauli("XX"), parse_pauli("ZZ")));
}

TEST_CASE("commutes agrees with the dense commutator, exhaustive for n <= 2") {
  for (uint32_t n = 1; n <= 2; ++n) {
    const uint64_t count = 1ull << (2 * n);
    for (uint64_t a = 0; a < count; ++a) {
      for (uint64_t b = 0; b < count; ++b) {
        PauliString p = PauliString::identity(n);
        p.x = a & ((1ull << n) - 1);
        p.z = a >> n;
        PauliString q = PauliString::identity(n);
        q.x = b & ((1ull << n) - 1);
        q.z = b >> n;
        REQUIRE(commutes(p, q) == matrices_commute(p, q));
      }
    }
  }
}

TEST_CASE("commutes agrees with the dense commutator on random pairs, n <= 6") {
  Rng rng(0x5eed02);
  for (uint32_t n = 3; n <= 4; ++n) {
    for (int rep = 0; rep < 30; ++rep) {
      const PauliString p = random_pauli(n, rng);
      const PauliString q = random_pauli(n, rng);
      REQUIRE(commutes(p, q) == matrices_commute(p, q));
    }
  }
  for (int rep = 0; rep < 12; ++rep) {
    const PauliString p = random_pauli(6, rng);
    const PauliString q = random_pauli(6, rng);
    REQUIRE(commutes(p, q) == matrices_commute(p, q));
  }
}

TEST_CASE("literal round-trip, qubit 0 leftmost") {
  const PauliString p = parse_pauli("XI");
  CHECK(p.x == 1);
  CHECK(p.z == 0);
  CHECK(p.num_qubits == 2);
  for (const char* text : {"IXYZ", "-Z", "+iXX", "-iYIZ", "XYZI"}) {
    const PauliString parsed = parse_pauli(text);
    std::string canonical = text;
    if (canonical[0] == '+' && canonical[1] != 'i') canonical.erase(0, 1);
    CHECK(to_string(parsed) == canonical);
  }
  CHECK(to_string(parse_pauli("+X")) == "X");
  CHECK_THROWS_AS(parse_pauli("XQ"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("-"), std::invalid_argument);
}

TEST_CASE("hermiticity and real sign") {
  CHECK(parse_pauli("Y").is_hermitian());
  CHECK(parse_pauli("-Y").is_hermitian());
  CHECK_FALSE(parse_pauli("+iX").is_hermitian());
  CHECK(parse_pauli("-ZZ").real_sign() == -1);
  CHECK(parse_pauli("YY").real_sign() == +1);
  CHECK(parse_pauli("XYZ").weight() == 3);
}

TEST_SUITE_END();
