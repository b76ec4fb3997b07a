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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qemlab/pauli.hpp"

namespace qem {

enum class GateKind : uint8_t {
  H, S, Sdg, X, Y, Z, CX, CZ, Swap, Rx, Ry, Rz, CPauli, MeasureZ, Reset,
};

/// One circuit instruction. CX/CZ store (control, target)/(a, b) in qubits;
/// CPauli stores the ancilla control in qubits[0] and the data-qubit Pauli
/// (width n_data, sign +-1) in `pauli`.
struct Gate {
  GateKind kind;
  uint32_t qubits[2] = {0, 0};
  double angle = 0;    // rotations only
  PauliString pauli;   // CPauli only

  static Gate one(GateKind k, uint32_t q) { return Gate{k, {q, 0}, 0, {}}; }
  static Gate two(GateKind k, uint32_t a, uint32_t b) { return Gate{k, {a, b}, 0, {}}; }
  static Gate rotation(GateKind k, uint32_t q, double theta) {
    return Gate{k, {q, 0}, theta, {}};
  }
  static Gate cpauli(uint32_t control, const PauliString& p) {
    return Gate{GateKind::CPauli, {control, 0}, 0, p};
  }

  bool is_rotation() const {
    return kind == GateKind::Rx || kind == GateKind::Ry || kind == GateKind::Rz;
  }
  bool is_two_qubit() const {
    return kind == GateKind::CX || kind == GateKind::CZ || kind == GateKind::Swap;
  }
  bool is_measurement() const {
    return kind == GateKind::MeasureZ || kind == GateKind::Reset;
  }
  /// Number of explicit qubit operands (CPauli counts its control only).
  uint32_t arity() const { return is_two_qubit() ? 2 : 1; }

  bool operator==(const Gate&) const = default;
};

/// Ordered gate list over n_data data qubits followed by n_ancilla ancillas.
/// Data qubits are indices [0, n_data), ancillas [n_data, n_data+n_ancilla).
struct Circuit {
  uint32_t n_data = 0;
  uint32_t n_ancilla = 0;
  std::vector<Gate> gates;

  struct Metadata {
    std::string label;
    uint64_t seed = 0;
    uint32_t depth = 0;
    bool operator==(const Metadata&) const = default;
  } metadata;

  uint32_t total_qubits() const { return n_data + n_ancilla; }

  /// True iff every rotation angle is a multiple of pi/2.
  bool is_clifford() const;
  bool has_measurement() const;

  /// Checks operand ranges, rotation angles finite, CPauli supports.
  void validate() const;

  bool operator==(const Circuit&) const = default;
};

/// Line-oriented text form, one gate per line, with a `qubits=... ancillas=...
/// seed=... depth=... label=...` header. Values round-trip bit-exactly.
/// `manifest` lines, when given, are embedded as leading `# ` comments.
std::string to_text(const Circuit& c, const std::vector<std::string>& manifest = {});
Circuit circuit_from_text(std::string_view text);

void save_circuit(const Circuit& c, const std::string& path,
                  const std::vector<std::string>& manifest = {});
Circuit load_circuit(const std::string& path);

}  // namespace qem
