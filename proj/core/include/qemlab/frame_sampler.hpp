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

#include "qemlab/trajectory.hpp"

namespace qem {

/// True when run_shots_frames can sample the circuit: Clifford gates only,
/// no resets, and measurements confined to a trailing suffix.
bool frames_compatible(const Circuit& c);

/// Pauli-frame sampler for Clifford circuits: the noiseless final state is
/// solved once, each shot then propagates only the injected-error frame
/// (O(1) bit ops per gate) and draws the reference outcome from the cached
/// noiseless distribution. Produces the same outcome distribution as
/// run_shots at a tiny fraction of its cost; used by the pipelines whenever
/// the payload is Clifford.
std::vector<ShotRecord> run_shots_frames(const Circuit& c, const NoiseModel& noise,
                                         uint64_t shots, uint64_t seed,
                                         const RunOptions& options = {});

/// run_shots_frames when compatible, run_shots otherwise.
std::vector<ShotRecord> sample_shots_auto(const Circuit& c, const NoiseModel& noise,
                                          uint64_t shots, uint64_t seed,
                                          const RunOptions& options = {});

/// Sampler for circuits whose non-Clifford gates are confined to the prefix
/// [0, split): the noiseless state after the Clifford suffix is solved once,
/// shots whose prefix drew no noise event ride the Pauli frame, and only the
/// rare shots with prefix noise fall back to full statevector evolution.
/// Distribution-identical to run_shots. Injections must lie at or after
/// `split`.
std::vector<ShotRecord> run_shots_prefix_hybrid(const Circuit& c,
                                                const NoiseModel& noise,
                                                size_t split, uint64_t shots,
                                                uint64_t seed,
                                                const RunOptions& options = {});

}  // namespace qem
