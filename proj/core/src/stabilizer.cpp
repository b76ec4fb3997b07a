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

#include "qemlab/stabilizer.hpp"

#include <stdexcept>

namespace qem {

StabilizerState::StabilizerState(const CliffordTableau& u) : n_(u.num_qubits()) {
  destab_.reserve(n_);
  stab_.reserve(n_);
  for (uint32_t q = 0; q < n_; ++q) {
    destab_.push_back(u.image_x(q));
    stab_.push_back(u.image_z(q));
  }
}

double StabilizerState::probability_of(uint64_t outcome) const {
  // Forced sequential Z measurements on scratch copies of the rows. Each
  // random outcome contributes a factor 1/2; a deterministic one either
  // matches the forced bit or kills the amplitude.
  std::vector<PauliString> destab = destab_;
  std::vector<PauliString> stab = stab_;
  double prob = 1.0;
  for (uint32_t q = 0; q < n_; ++q) {
    const uint64_t bit = 1ull << q;
    const int forced = static_cast<int>((outcome >> q) & 1);
    size_t pivot = n_;
    for (size_t i = 0; i < n_; ++i) {
      if (stab[i].x & bit) {
        pivot = i;
        break;
      }
    }
    if (pivot != n_) {
      // Random outcome; condition the state on the forced bit.
      prob *= 0.5;
      for (size_t i = 0; i < n_; ++i) {
        if (i != pivot && (stab[i].x & bit)) {
          stab[i] = multiply(stab[pivot], stab[i]);
          if (!stab[i].is_hermitian()) {
            throw std::logic_error("stabilizer: non-Hermitian row product");
          }
        }
        if (destab[i].x & bit && i != pivot) {
          // Destabilizer phases are immaterial; keep masks consistent.
          PauliString m = multiply(stab[pivot], destab[i]);
          m.phase_exp = static_cast<uint8_t>(std::popcount(m.x & m.z) & 3);
          destab[i] = m;
        }
      }
      destab[pivot] = stab[pivot];
      PauliString repl = PauliString::single_z(n_, q);
      if (forced == 1) repl.phase_exp = 2;
      stab[pivot] = repl;
    } else {
      // Deterministic: product of stabilizers flagged by destabilizer
      // anticommutation gives +-Z_q.
      PauliString acc = PauliString::identity(n_);
      for (size_t i = 0; i < n_; ++i) {
        if (destab[i].x & bit) acc = multiply(acc, stab[i]);
      }
      if (acc.x != 0 || acc.z != bit || !acc.is_hermitian()) {
        throw std::logic_error("stabilizer: deterministic row is not +-Z_q");
      }
      const int value = acc.real_sign() > 0 ? 0 : 1;
      if (value != forced) return 0.0;
      // State unchanged by a deterministic measurement.
    }
  }
  return prob;
}

}  // namespace qem
