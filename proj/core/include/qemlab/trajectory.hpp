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
#include <span>
#include <vector>

#include "qemlab/circuit.hpp"
#include "qemlab/noise_model.hpp"
#include "qemlab/pauli.hpp"

namespace qem {

/// One sampled trajectory outcome. Bit q of data_bits is data qubit q; bit k
/// of ancilla_bits is ancilla n_data+k. trajectory_seed is the shot's stream
/// index: together with the run's master seed it replays the trajectory.
struct ShotRecord {
  uint64_t data_bits = 0;
  uint64_t ancilla_bits = 0;
  uint64_t trajectory_seed = 0;
};

/// Extra stochastic channel spliced into the gate list: with probability
/// `rate`, a Pauli drawn uniformly from the full group on `qubit_mask`
/// (identity included) is applied before gate `before_gate_index`. With the
/// identity included this realizes an exact global depolarizing channel on
/// the masked qubits.
struct InjectedChannel {
  size_t before_gate_index = 0;  // == gates.size() applies after the last gate
  double rate = 0;
  uint64_t qubit_mask = 0;
};

struct RunOptions {
  int threads = 0;  // <= 1 runs sequentially; results are thread-count free
  std::vector<InjectedChannel> injections;
  /// When set, resized to `shots`; bit k of entry i records whether
  /// injection k fired during shot i.
  std::vector<uint8_t>* injection_fired = nullptr;
};

/// Where depolarizing events may fire for one gate. A weight-w controlled
/// Pauli decomposes into w two-qubit sites (control, support qubit), each
/// drawing the two-qubit rate.
struct NoiseSite {
  uint32_t q0 = 0;
  uint32_t q1 = 0;
  uint8_t arity = 1;
  double rate = 0;
};

/// Per-gate noise sites for a circuit. Check gates (any gate touching an
/// ancilla) are skipped when the model's noisy_checks is false. The model's
/// Gaussian spec, if enabled, is realized first.
std::vector<std::vector<NoiseSite>> noise_plan(const Circuit& c, const NoiseModel& noise);

/// Random non-identity Pauli on a noise site's support.
PauliString draw_noise_pauli(const NoiseSite& site, uint32_t n_total, class Rng& rng);

/// Pauli drawn uniformly from the full group on the masked qubits, identity
/// included (the unitary-mixture form of a global depolarizing channel).
PauliString draw_uniform_pauli(uint64_t qubit_mask, uint32_t n_total, class Rng& rng);

/// Monte-Carlo trajectory sampling with dense statevector evolution: each
/// gate is followed, independently per noise site, by a uniformly random
/// non-identity Pauli with the site's rate. Explicit MeasureZ gates sample
/// and collapse; remaining qubits are read out jointly at the end. Shot i
/// uses the derived stream (seed, i), so results are order-independent and
/// reproducible. Hard cap of 24 total qubits.
std::vector<ShotRecord> run_shots(const Circuit& c, const NoiseModel& noise,
                                  uint64_t shots, uint64_t seed,
                                  const RunOptions& options = {});

struct ExpectationEstimate {
  double value = 0;
  uint64_t kept_shots = 0;
  uint64_t total_shots = 0;
  double std_error = 0;
};

/// Mean of (-1)^(parity of bits on the observable's Z support) over kept
/// shots. With post_select, keeps only all-zero-ancilla shots and throws
/// PostselectionStarved when none survive. The observable must be diagonal
/// (I/Z only) on the data qubits.
ExpectationEstimate expectation_z_basis(std::span<const ShotRecord> records,
                                        const PauliString& observable,
                                        bool post_select);

}  // namespace qem
