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

#include "qemlab/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace qem {

PauliString multiply(const PauliString& p, const PauliString& q) {
  if (p.num_qubits != q.num_qubits) {
    throw std::invalid_argument("pauli multiply: size mismatch");
  }
  PauliString r;
  r.num_qubits = p.num_qubits;
  r.x = p.x ^ q.x;
  r.z = p.z ^ q.z;
  // Moving p's Z block past q's X block picks up (-1) per crossing.
  const int crossings = std::popcount(p.z & q.x);
  r.phase_exp = static_cast<uint8_t>((p.phase_exp + q.phase_exp + 2 * crossings) & 3);
  return r;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.num_qubits != q.num_qubits) {
    throw std::invalid_argument("pauli commutes: size mismatch");
  }
  const int sym = std::popcount(p.x & q.z) ^ std::popcount(p.z & q.x);
  return (sym & 1) == 0;
}

std::string to_string(const PauliString& p) {
  std::string out;
  const int sign = (p.phase_exp - std::popcount(p.x & p.z)) & 3;
  switch (sign) {
    case 0: break;
    case 1: out += "+i"; break;
    case 2: out += "-"; break;
    case 3: out += "-i"; break;
  }
  for (uint32_t q = 0; q < p.num_qubits; ++q) {
    const bool bx = (p.x >> q) & 1;
    const bool bz = (p.z >> q) & 1;
    out += bx ? (bz ? 'Y' : 'X') : (bz ? 'Z' : 'I');
  }
  return out;
}

PauliString parse_pauli(std::string_view text) {
  size_t pos = 0;
  int sign = 0;  // exponent of i carried by the prefix
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? 2 : 0;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      sign = (sign + 1) & 3;
      ++pos;
    }
  } else if (pos < text.size() && text[pos] == 'i') {
    sign = 1;
    ++pos;
  }
  if (pos >= text.size()) {
    throw std::invalid_argument("pauli literal: missing letters");
  }
  PauliString p;
  uint32_t q = 0;
  for (; pos < text.size(); ++pos, ++q) {
    if (q >= 64) throw std::invalid_argument("pauli literal: too many qubits");
    switch (text[pos]) {
      case 'I': break;
      case 'X': p.x |= 1ull << q; break;
      case 'Y': p.x |= 1ull << q; p.z |= 1ull << q; break;
      case 'Z': p.z |= 1ull << q; break;
      default:
        throw std::invalid_argument("pauli literal: bad character '" +
                                    std::string(1, text[pos]) + "'");
    }
  }
  p.num_qubits = q;
  p.phase_exp = static_cast<uint8_t>((sign + std::popcount(p.x & p.z)) & 3);
  return p;
}

}  // namespace qem
