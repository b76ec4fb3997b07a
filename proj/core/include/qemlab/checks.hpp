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
#include <optional>
#include <vector>

#include "qemlab/circuit.hpp"
#include "qemlab/pauli.hpp"

namespace qem {

/// A check pair satisfying L U R = U for the protected payload region: R is
/// applied (controlled) before the region, L after.
struct CheckPair {
  PauliString right;
  PauliString left;
};

enum class CheckScope { CliffordOnly, FullCircuit };

/// Payload plus the nested check layers wrapping gates
/// [region_begin, region_end). One ancilla per layer; layer 0 is innermost.
struct SandwichPlan {
  Circuit payload;
  size_t region_begin = 0;
  size_t region_end = 0;
  std::vector<CheckPair> layers;
  CheckScope scope = CheckScope::FullCircuit;
};

/// Propagates `right` forward through payload gates [begin, end): Clifford
/// gates conjugate exactly, a rotation exp(-i theta P/2) passes the current
/// Pauli unchanged iff it commutes with P. Returns the pair on success,
/// nullopt when a rotation blocks the traversal (conservative: a pass-through
/// failure does not prove no pair exists).
std::optional<CheckPair> find_check_pair(const Circuit& payload,
                                         const PauliString& right,
                                         size_t begin = 0,
                                         size_t end = SIZE_MAX);

/// The sandwich circuit with bookkeeping for error injection and scoping.
struct SandwichCircuit {
  Circuit circuit;
  size_t payload_begin = 0;  // gate index where the protected region starts
  size_t payload_end = 0;    // one past the protected region
};

/// Emits the layered sandwich: per layer j (innermost first), ancilla j gets
/// H, controlled-R_j before the region and controlled-L_j, H after it, then
/// Z measurements of every ancilla and every data qubit. Each pair is
/// re-validated against the payload region. Post-selection keeps all-zero
/// ancilla readouts.
SandwichCircuit build_sandwich(const SandwichPlan& plan);

/// Manifest comment lines (`layer j: R=..., L=...`) for circuit files.
std::vector<std::string> sandwich_manifest(const SandwichPlan& plan);

enum class CheckBasis { ZBasis, Arbitrary };

/// Checks sufficient for unit fidelity: n for Z-basis observables with
/// single-qubit Z checks, 2n for arbitrary observables.
uint32_t max_checks(uint32_t n_qubits, CheckBasis basis);

/// Three-state Markov model of one check layer: detected / undetected / no
/// error, with transition probabilities t_d, t_u, t_ok out of the clean
/// state and a 1/2 detection chance for an existing undetected error.
struct MarkovModel {
  double epsilon = 0;
  double t_d = 0;
  double t_u = 0;
  double t_ok = 1;
};

/// pi = (0, eps, 1-eps) evolved through m check transitions; returns the
/// logical-error probability pi_2 / (pi_2 + pi_3). For perfect checks this
/// equals eps / (2^m (1 - eps) + eps).
double markov_logical_error(const MarkovModel& model, uint32_t m);

}  // namespace qem
