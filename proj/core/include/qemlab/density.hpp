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
#include "qemlab/noise_model.hpp"
#include "qemlab/pauli.hpp"
#include "qemlab/statevector.hpp"

namespace qem {

/// Exact mixed-state evolution of a noisy circuit in superoperator form;
/// the oracle counterpart of the trajectory sampler for up to 10 total
/// qubits. Depolarizing channels are applied exactly (all Pauli branches
/// weighted), matching the trajectory sampler's per-gate noise sites.
class DensityMatrix {
 public:
  using cplx = std::complex<double>;

  /// |0..0><0..0| over n qubits, the first n_data of which are data qubits
  /// (n_data = 0 means all of them).
  explicit DensityMatrix(uint32_t n, uint32_t n_data = 0);

  /// Evolves |0..0><0..0| through the circuit with the noise model.
  /// Measurement gates are ignored during evolution (readout is exact, via
  /// the projector queries below); Reset is not supported.
  static DensityMatrix evolve(const Circuit& c, const NoiseModel& noise);

  uint32_t num_qubits() const { return n_; }
  uint32_t data_qubits() const { return n_data_; }

  double trace() const;
  double purity() const;

  /// tr(rho P) for an arbitrary Pauli observable over all qubits.
  double expectation(const PauliString& p) const;

  /// Exact post-selected expectation of a diagonal (I/Z) observable on the
  /// data qubits: tr(Pi0 rho Pi0 O)/tr(Pi0 rho) with Pi0 projecting every
  /// ancilla onto |0>. Without post_select, the plain expectation.
  double expectation_z_data(const PauliString& observable, bool post_select,
                            double* keep_rate = nullptr) const;

  void apply_gate(const Gate& g);
  void apply_pauli(const PauliString& p);
  /// Depolarizing channel on the given support (1 or 2 qubits).
  void apply_depolarizing(const std::vector<uint32_t>& support, double rate);
  /// rho -> (1-p) rho + p I/d over all qubits.
  void apply_global_depolarizing(double rate);

  /// Entry rho[ket, bra].
  cplx entry(uint64_t ket, uint64_t bra) const {
    return vec_.amplitude((ket << n_) | bra);
  }

 private:
  // rho is stored vectorized on 2n qubits: bra bits low, ket bits high, so a
  // gate U becomes U on the high block and conj(U) on the low block.
  uint32_t n_;
  uint32_t n_data_ = 0;
  Statevector vec_;
};

}  // namespace qem
