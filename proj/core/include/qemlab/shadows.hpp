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

#include "qemlab/checks.hpp"
#include "qemlab/circuit.hpp"
#include "qemlab/fit.hpp"
#include "qemlab/noise_model.hpp"
#include "qemlab/tableau.hpp"

namespace qem {

enum class Protection { None, CliffordOnly, FullCircuit };

const char* protection_name(Protection p);

/// Shadow-estimation bookkeeping; the defaults are the benchmark protocol
/// values (10,000 circuits, 100 shots each, 20 median-of-means groups, the
/// N schedule 100..10000).
struct EstimatorConfig {
  uint32_t n_groups = 20;
  uint32_t shadow_circuits = 10000;
  uint32_t shots_per_circuit = 100;
  std::vector<uint32_t> subset_sizes = {100, 400, 1000, 4000, 10000};
};

struct ShadowShot {
  uint32_t circuit_idx = 0;
  uint64_t outcome = 0;  // data-qubit bits
  bool kept = true;      // all-zero ancillas when protected; true otherwise
};

/// One pool of shadow samples: the sampled Cliffords plus circuit-major shot
/// records. Samples from the same shadow circuit share its tableau.
struct ShadowSet {
  uint32_t n_data = 0;
  Protection protection = Protection::None;
  uint32_t layers = 0;
  uint32_t shots_per_circuit = 0;
  std::vector<CliffordTableau> cliffords;
  std::vector<uint64_t> circuit_seeds;
  std::vector<ShadowShot> shots;

  uint32_t num_circuits() const { return static_cast<uint32_t>(cliffords.size()); }
};

struct ShadowOptions {
  int threads = 0;
  /// Strength of an exact global depolarizing channel applied once right
  /// after the shadow unitary (the GTM reference channel); 0 disables it.
  double global_depol_after_clifford = 0;
};

/// Runs the shadow protocol over `cfg.shadow_circuits` sampled global
/// Cliffords appended to the preparation circuit, with optional check
/// protection of the Clifford portion or the whole circuit (single-qubit Z
/// rights on the lowest-index qubits). Throws when a requested full-circuit
/// check does not commute through the preparation, naming the failing right.
ShadowSet collect_shadows(const Circuit& prep, const NoiseModel& noise,
                          const EstimatorConfig& cfg, Protection protection,
                          uint32_t layers, uint64_t seed,
                          const ShadowOptions& options = {});

/// <b|U O U^dagger|b> in {-1, 0, +1} via tableau conjugation: zero whenever
/// the image has X/Y support, otherwise the image sign times the outcome
/// parity on its Z support.
int snapshot_eigenvalue(const CliffordTableau& u, uint64_t outcome,
                        const PauliString& observable);

/// Median-of-means estimate of a traceless Pauli from kept snapshots,
/// snapshot value (d+1) * <b|U O U^dagger|b>. Circuits are partitioned into
/// cfg.n_groups contiguous groups. use_circuits restricts to the first N
/// circuits of the pool (0 = all).
double estimate_pauli(const ShadowSet& samples, const PauliString& observable,
                      const EstimatorConfig& cfg, uint32_t use_circuits = 0);

struct RsCalibration {
  double f_hat = 0;
  uint64_t rounds = 0;
  double epsilon = 0.01;
  double delta = 0.05;
  double f_z = 1.0;
};

/// Robust-shadow calibration: per round prepare |0..0>, run a sampled noisy
/// Clifford, measure, and average f = (d p_ideal(b) - 1)/(d - 1) with the
/// ideal probability from the noiseless tableau; median of means over
/// cfg.n_groups groups. Noiseless expectation is 1/(d+1).
RsCalibration rs_calibrate(const NoiseModel& noise, uint32_t n, uint64_t rounds,
                           const EstimatorConfig& cfg, uint64_t seed,
                           const ShadowOptions& options = {});

/// Robust estimate: snapshots <b|U O U^dagger|b> / f_hat. Requires a
/// strictly positive f_hat.
double rs_estimate(const ShadowSet& samples, const PauliString& observable,
                   const RsCalibration& cal, const EstimatorConfig& cfg,
                   uint32_t use_circuits = 0);

/// Calibration sample count
/// R = 136 ln(2/delta) (1+eps^2)(1+1/d)^2 / (eps^2 (f_z - 1/d)^2), rounded up.
uint64_t rs_sample_count(double epsilon, double delta, double d, double f_z);

struct PceShadowEstimate {
  PauliString observable;
  FitResult fit;
  std::vector<double> per_layer;  // implemented-layer estimates, 1..checks_used
};

/// Check-extrapolated shadow estimation: collects protected pools with
/// 1..checks_used layers, estimates each observable per layer count, fits the
/// model over layer counts and evaluates it at max_checks(n, ZBasis).
std::vector<PceShadowEstimate> pce_shadow_estimate(
    const Circuit& prep, const NoiseModel& noise, const EstimatorConfig& cfg,
    const std::vector<PauliString>& observables, uint32_t checks_used,
    FitKind model, Protection protection, uint64_t seed,
    const ShadowOptions& options = {});

/// All single-qubit Z and two-qubit ZZ observables on n qubits.
std::vector<PauliString> default_z_observables(uint32_t n);

}  // namespace qem
