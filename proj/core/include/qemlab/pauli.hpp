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

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>

namespace qem {

/// Signed n-qubit Pauli operator in symplectic (x|z) bit form.
///
/// The operator is i^phase_exp * X^x * Z^z with qubit q at bit q of each
/// mask. The phase convention is fixed by that ordering: X.Z = -iY, and a
/// stored Y (x and z bits both set) carries phase_exp = 1 so that Y = iXZ.
/// Values are immutable in spirit; all operations return new strings.
struct PauliString {
  uint32_t num_qubits = 0;
  uint64_t x = 0;
  uint64_t z = 0;
  uint8_t phase_exp = 0;  // exponent of i, 0..3

  static PauliString identity(uint32_t n) { return PauliString{n, 0, 0, 0}; }
  static PauliString single_x(uint32_t n, uint32_t q) {
    return PauliString{n, 1ull << q, 0, 0};
  }
  static PauliString single_y(uint32_t n, uint32_t q) {
    return PauliString{n, 1ull << q, 1ull << q, 1};
  }
  static PauliString single_z(uint32_t n, uint32_t q) {
    return PauliString{n, 0, 1ull << q, 0};
  }

  uint64_t mask() const { return num_qubits >= 64 ? ~0ull : (1ull << num_qubits) - 1; }
  bool is_identity() const { return x == 0 && z == 0 && phase_exp == 0; }
  bool is_identity_up_to_phase() const { return x == 0 && z == 0; }
  uint32_t weight() const { return static_cast<uint32_t>(std::popcount(x | z)); }

  /// True iff the operator is Hermitian (sign +1 or -1, never +-i).
  bool is_hermitian() const {
    return ((phase_exp - std::popcount(x & z)) & 1) == 0;
  }

  /// +1 or -1 for Hermitian strings; the sign in front of the I/X/Y/Z letters.
  int real_sign() const {
    const int k = (phase_exp - std::popcount(x & z)) & 3;
    return k == 0 ? +1 : -1;
  }

  /// Returns a copy widened to more qubits (new qubits are identity).
  PauliString widened(uint32_t n) const { return PauliString{n, x, z, phase_exp}; }

  bool operator==(const PauliString&) const = default;
};

/// Signed product pq (p acts after q as operators; phases compose exactly).
PauliString multiply(const PauliString& p, const PauliString& q);

/// True iff the symplectic inner product x_p.z_q + z_p.x_q vanishes mod 2.
bool commutes(const PauliString& p, const PauliString& q);

/// Textual literal: optional sign prefix (+, -, +i, -i) then one of IXYZ per
/// qubit, qubit 0 leftmost. Examples: "ZZ", "-iXYZI".
std::string to_string(const PauliString& p);
PauliString parse_pauli(std::string_view text);

}  // namespace qem
