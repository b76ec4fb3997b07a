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

#include <complex>
#include <vector>

#include "qemlab/circuit.hpp"
#include "qemlab/pauli.hpp"
#include "qemlab/rng.hpp"

namespace qem {

/// Dense statevector over up to 24 qubits, |0...0> initial state. Basis
/// index bit q is qubit q.
class Statevector {
 public:
  using cplx = std::complex<double>;

  explicit Statevector(uint32_t n);

  uint32_t num_qubits() const { return n_; }
  size_t dim() const { return amp_.size(); }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  std::vector<cplx>& mutable_amplitudes() { return amp_; }

  void reset_to_zero();

  /// Applies any unitary gate kind; throws for MeasureZ/Reset.
  void apply_gate(const Gate& g);

  void apply_pauli(const PauliString& p);

  /// Born-rule measurement of qubit q with collapse.
  int measure(uint32_t q, Rng& rng);

  /// Samples a full computational-basis outcome (no collapse).
  uint64_t sample_outcome(Rng& rng) const;

  void reset_qubit(uint32_t q, Rng& rng);

  double probability_of_qubit_one(uint32_t q) const;
  double norm_squared() const;
  cplx amplitude(uint64_t basis) const { return amp_[basis]; }

  /// <psi| P |psi> (real part; exact expectation is real for Hermitian P).
  double expectation(const PauliString& p) const;

 private:
  void apply_one_qubit(uint32_t q, const cplx m[2][2]);

  uint32_t n_;
  std::vector<cplx> amp_;
};

}  // namespace qem
