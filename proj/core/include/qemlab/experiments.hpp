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

#include <string>
#include <vector>

#include "qemlab/manifest.hpp"

namespace qem {

struct HeatmapCell {
  uint32_t n = 0;
  uint32_t depth = 0;
  double pce_err = 0;
  double best_zne_err = 0;
  std::string best_zne_label;
  double diff = 0;  // best_zne_err - pce_err; positive favors PCE
  double unmitigated_err = 0;
  std::vector<uint64_t> circuit_seeds;
};

struct HeatmapResult {
  std::vector<HeatmapCell> cells;
};

/// Runs the PCE-vs-ZNE sweep. Each cell samples random Clifford circuits
/// until circuits_per_cell instances with ideal <Z..Z> = +1 are found, runs
/// PCE with n/2 checks and the full ZNE scan (every scale set, every model,
/// 50k budget each), and reports per-cell mean absolute errors. Throws on
/// cell starvation (retry cap).
HeatmapResult run_heatmap(const HeatmapManifest& manifest);

struct MarkovRow {
  uint32_t m = 0;
  double epsilon = 0;
  double predicted = 0;
  double empirical = 0;
  uint64_t kept_shots = 0;
  uint64_t total_shots = 0;
};

struct MarkovResult {
  std::vector<MarkovRow> rows;
};

/// Single depolarizing event of strength epsilon on the data register (a
/// uniformly random Pauli, identity included) against m noiseless checks;
/// the empirical logical-error rate is the fraction of kept shots whose
/// trajectory carries an injected error.
MarkovResult run_markov_check(const MarkovManifest& manifest);

struct ShadowCompareRow {
  std::string observable;
  uint32_t subset = 0;  // N
  std::string method;
  double estimate = 0;
  double abs_error = 0;
};

struct ShadowMethodSummary {
  uint32_t subset = 0;
  std::string method;
  double mean_abs_error = 0;
};

struct ShadowCompareResult {
  std::vector<ShadowCompareRow> rows;
  std::vector<ShadowMethodSummary> summary;
};

/// Shadow-estimator comparison over the N schedule: ideal, unmitigated,
/// robust, implemented checks (clifford_only and full_circuit scopes) and
/// their extrapolations.
ShadowCompareResult run_shadow_compare(const ShadowCompareManifest& manifest);

/// CSV writers; every float uses a fixed %.10g format so reruns are
/// byte-identical. Paths are created as needed.
void write_heatmap_outputs(const HeatmapManifest& manifest, const HeatmapResult& result);
void write_markov_outputs(const MarkovManifest& manifest, const MarkovResult& result);
void write_shadow_compare_outputs(const ShadowCompareManifest& manifest,
                                  const ShadowCompareResult& result);

std::string csv_double(double v);

}  // namespace qem
