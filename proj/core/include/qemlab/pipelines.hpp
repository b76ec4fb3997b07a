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

#include "qemlab/checks.hpp"
#include "qemlab/circuit.hpp"
#include "qemlab/fit.hpp"
#include "qemlab/noise_model.hpp"
#include "qemlab/trajectory.hpp"

namespace qem {

struct PcePipelineResult {
  FitResult fit;
  std::vector<ExpectationEstimate> per_layer;  // layer counts 1..checks_used
  std::vector<uint64_t> shots_per_layer;
};

/// Pauli-check extrapolation on <Z..Z>: builds sandwiches with 1..checks_used
/// single-qubit Z check layers (lowest-index qubits first), splits the shot
/// budget evenly across them, fits the model to the post-selected values and
/// extrapolates to max_checks(n, ZBasis). Starvation at any layer propagates
/// with the layer index.
PcePipelineResult pce_pipeline(const Circuit& payload, const NoiseModel& noise,
                               uint32_t checks_used, FitKind model,
                               uint64_t shots_total, uint64_t seed,
                               const RunOptions& options = {});

struct ZnePipelineResult {
  FitResult fit;
  std::vector<ExpectationEstimate> per_scale;
};

/// Zero-noise extrapolation on <Z..Z>: folds the payload at each scale
/// factor, splits the budget evenly, and extrapolates to the zero-noise
/// abscissa (0 for linear/exponential; Richardson weights by construction).
/// Scales must start at 1 and increase strictly.
ZnePipelineResult zne_pipeline(const Circuit& payload, const NoiseModel& noise,
                               const std::vector<double>& scales, FitKind model,
                               uint64_t shots_total, uint64_t seed,
                               const RunOptions& options = {});

/// Evenly split budget: floor(total/parts) each, remainder spread one extra
/// to the first (total mod parts) parts.
std::vector<uint64_t> split_shots(uint64_t total, size_t parts);

/// The measured ZNE series alone (one folded run per scale, budget split
/// evenly); several models can be fitted to the same data.
std::vector<SeriesPoint> zne_series(const Circuit& payload, const NoiseModel& noise,
                                    const std::vector<double>& scales,
                                    uint64_t shots_total, uint64_t seed,
                                    const RunOptions& options = {});

}  // namespace qem
