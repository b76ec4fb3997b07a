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
#include <string>
#include <vector>

#include "qemlab/fit.hpp"
#include "qemlab/noise_model.hpp"
#include "qemlab/shadows.hpp"

namespace qem {

/// Random-Clifford PCE-vs-ZNE sweep over a (qubits x depths) grid. Desk
/// defaults; the full grid sits behind the CLI --full-grid flag.
struct HeatmapManifest {
  uint64_t seed = 20260808;
  int threads = 0;
  std::vector<uint32_t> qubits = {4, 6, 8};
  std::vector<uint32_t> depths = {10, 25, 40};
  uint32_t circuits_per_cell = 20;
  uint64_t shots = 50000;
  uint64_t retry_cap = 200000;
  std::vector<std::vector<double>> scale_sets = {
      {1, 1.1, 1.2},          {1, 1.2, 1.6},
      {1, 3, 5},              {1, 2, 3, 4, 5},
      {1, 3, 5, 7, 9},        {1, 1.1, 1.2, 1.3, 1.4},
      {1, 1.2, 1.5, 1.8, 2},
  };
  std::vector<FitKind> zne_models = {FitKind::Richardson, FitKind::Linear,
                                     FitKind::Exponential};
  FitKind pce_model = FitKind::Exponential;
  NoiseModel noise = default_noise();
  std::string out_dir = "out";

  static NoiseModel default_noise() {
    NoiseModel m;
    m.p1 = 5e-4;
    m.p2 = 5e-3;
    return m;
  }
  void apply_full_grid() {
    qubits = {4, 6, 8, 10, 12};
    depths = {10, 25, 40, 80, 120};
  }
};

/// Single tunable error channel against m noiseless checks; validates the
/// closed-form logical-error curve.
struct MarkovManifest {
  uint64_t seed = 7;
  int threads = 0;
  uint32_t n = 4;
  double epsilon = 0.1;
  uint32_t max_layers = 4;
  uint64_t shots = 50000;
  std::string out_dir = "out";
};

/// Shadow-estimator comparison (unmitigated / robust / checked / check-
/// extrapolated) over the N schedule.
struct ShadowCompareManifest {
  uint64_t seed = 11;
  int threads = 0;
  uint32_t n = 4;
  uint32_t prep_layers = 2;
  uint64_t prep_seed = 5;
  int prep_checkable = -1;
  EstimatorConfig estimator = desk_estimator();
  uint32_t checks_used = 3;
  std::vector<uint32_t> implemented_layers = {1, 2, 3, 4};
  std::vector<uint32_t> prepcheck_layers = {1, 2, 3};
  FitKind model = FitKind::Exponential;
  uint64_t rs_rounds = 50000;
  std::vector<std::string> extra_observables;
  bool dump_samples = false;
  NoiseModel noise = default_noise();
  std::string out_dir = "out";

  static EstimatorConfig desk_estimator() {
    EstimatorConfig cfg;
    cfg.shadow_circuits = 2000;
    cfg.shots_per_circuit = 20;
    cfg.subset_sizes = {100, 400, 1000, 2000};
    return cfg;
  }
  static NoiseModel default_noise() {
    NoiseModel m;
    m.p1 = 0.002;
    m.p2 = 0.02;
    m.noisy_checks = true;
    return m;
  }
};

/// Canonical JSON round-trip: save(load(text)) reproduces text byte for byte
/// when text came from save.
std::string to_json_text(const HeatmapManifest& m);
std::string to_json_text(const MarkovManifest& m);
std::string to_json_text(const ShadowCompareManifest& m);

HeatmapManifest heatmap_manifest_from_json(const std::string& text,
                                           const std::string& base_dir = "");
MarkovManifest markov_manifest_from_json(const std::string& text,
                                         const std::string& base_dir = "");
ShadowCompareManifest shadow_compare_manifest_from_json(const std::string& text,
                                                        const std::string& base_dir = "");

/// Reads the "experiment" tag of a manifest file.
std::string manifest_kind(const std::string& path);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qem
