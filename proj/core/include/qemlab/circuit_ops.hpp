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

#include <optional>

#include "qemlab/circuit.hpp"
#include "qemlab/tableau.hpp"

namespace qem {

/// Random layered Clifford circuit. Each layer draws a subset size uniformly
/// from {1..n}, shuffles a subset of that size, fills it with two-qubit
/// gates on adjacent shuffled pairs and one-qubit Clifford gates on the
/// leftover qubit. Deterministic given the seed.
Circuit random_clifford_circuit(uint32_t n, uint32_t depth, uint64_t seed);

/// Payload followed by its gate-wise inverse in reverse order; the noiseless
/// action is the identity. Rejects circuits containing measurements.
Circuit mirror(const Circuit& c);

/// Global unitary folding U -> U (U^dagger U)^k with the trailing r gates
/// individually folded (g -> g g^dagger g), where k = floor((scale-1)/2) and
/// r = round(((scale - (1+2k))/2) * G). Gate count grows to ~round(scale*G);
/// the noiseless action is unchanged. Requires scale >= 1 and no
/// measurements.
Circuit fold_global(const Circuit& c, double scale);

Gate inverse_gate(const Gate& g);

/// Conjugation of a signed Pauli by one unitary gate (exact for Clifford
/// gates and Clifford-angle rotations; throws otherwise).
PauliString conjugate_by_gate(const PauliString& p, const Gate& g, uint32_t n_total);

/// Tableau of the whole circuit (composition of per-gate tableaux) over all
/// total_qubits() qubits. Throws on measurements or non-Clifford angles.
CliffordTableau clifford_tableau_of(const Circuit& c);

/// Noiseless <Z x...x Z> over the data qubits of a Clifford circuit applied
/// to |0...0>: +1/-1 when deterministic, 0 otherwise.
int ideal_z_parity(const Circuit& c);

/// Gate realization of a sampled Clifford, acting on qubits [offset, offset+n).
std::vector<Gate> ops_to_gates(const std::vector<CliffordOp>& ops, uint32_t offset = 0);

/// Non-Clifford state-preparation standin: an RY amplitude layer on qubits
/// [n_checkable, n), then `layers` blocks of shuffled CX pairs and RZ
/// rotations with random angles. Single-qubit Z check operators commute
/// through the whole circuit for qubits below n_checkable, so full-circuit
/// check layers up to n_checkable always exist. n_checkable < 0 picks the
/// default (n-1 for n <= 4, n/2 otherwise).
Circuit standin_prep(uint32_t n, uint32_t layers, uint64_t seed, int n_checkable = -1);

}  // namespace qem
