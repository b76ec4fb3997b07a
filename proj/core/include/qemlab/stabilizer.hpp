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
#include <vector>

#include "qemlab/pauli.hpp"
#include "qemlab/tableau.hpp"

namespace qem {

/// Stabilizer state U|0...0> held as stabilizer/destabilizer generator rows.
/// Computational-basis probabilities come from forced Gaussian-elimination
/// measurements, giving |<b|U|0..0>|^2 exactly (a dyadic rational).
class StabilizerState {
 public:
  /// State stabilized by the tableau's Z images (i.e. U|0..0> for tableau U).
  explicit StabilizerState(const CliffordTableau& u);

  uint32_t num_qubits() const { return n_; }

  /// Probability of reading the n-bit outcome b (bit q = qubit q).
  double probability_of(uint64_t outcome) const;

 private:
  uint32_t n_;
  std::vector<PauliString> destab_;
  std::vector<PauliString> stab_;
};

}  // namespace qem
