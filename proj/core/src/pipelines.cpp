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

#include "qemlab/pipelines.hpp"

#include <stdexcept>

#include "qemlab/circuit_ops.hpp"
#include "qemlab/errors.hpp"
#include "qemlab/frame_sampler.hpp"

namespace qem {

std::vector<uint64_t> split_shots(uint64_t total, size_t parts) {
  if (parts == 0) throw std::invalid_argument("split_shots: no parts");
  std::vector<uint64_t> out(parts, total / parts);
  const uint64_t extra = total % parts;
  for (uint64_t i = 0; i < extra; ++i) ++out[i];
  return out;
}

PcePipelineResult pce_pipeline(const Circuit& payload, const NoiseModel& noise,
                               uint32_t checks_used, FitKind model,
                               uint64_t shots_total, uint64_t seed,
                               const RunOptions& options) {
  const uint32_t n = payload.n_data;
  const uint32_t min_points = model == FitKind::Linear ? 2 : 3;
  if (checks_used < min_points) {
    throw std::invalid_argument("pce_pipeline: need at least " +
                                std::to_string(min_points) + " check layers");
  }
  if (checks_used > max_checks(n, CheckBasis::ZBasis)) {
    throw std::invalid_argument("pce_pipeline: checks_used exceeds max_checks");
  }
  PauliString observable = PauliString::identity(n);
  observable.z = (1ull << n) - 1;

  // The Gaussian tables must be identical across the layered variants.
  const NoiseModel realized = noise.realized(n + checks_used);

  PcePipelineResult result;
  result.shots_per_layer = split_shots(shots_total, checks_used);
  std::vector<SeriesPoint> series;
  series.reserve(checks_used);
  for (uint32_t m = 1; m <= checks_used; ++m) {
    SandwichPlan plan;
    plan.payload = payload;
    plan.region_begin = 0;
    plan.region_end = payload.gates.size();
    for (uint32_t j = 0; j < m; ++j) {
      const auto pair = find_check_pair(payload, PauliString::single_z(n, j));
      if (!pair.has_value()) {
        throw std::invalid_argument("pce_pipeline: no Z check through payload for qubit " +
                                    std::to_string(j));
      }
      plan.layers.push_back(*pair);
    }
    const SandwichCircuit sandwich = build_sandwich(plan);
    const auto records = sample_shots_auto(sandwich.circuit, realized,
                                           result.shots_per_layer[m - 1],
                                           Rng::derive(seed, m).next(), options);
    try {
      const auto est = expectation_z_basis(records, observable, /*post_select=*/true);
      result.per_layer.push_back(est);
      series.push_back(SeriesPoint{static_cast<double>(m), est.value, est.std_error});
    } catch (const PostselectionStarved&) {
      throw PostselectionStarved("pce_pipeline: post-selection starved at layer " +
                                     std::to_string(m),
                                 m);
    }
  }
  result.fit = fit_series(model, series,
                          static_cast<double>(max_checks(n, CheckBasis::ZBasis)));
  return result;
}

namespace {

void check_scales(const std::vector<double>& scales) {
  if (scales.empty() || scales.front() != 1.0) {
    throw std::invalid_argument("zne: scales must start at 1");
  }
  for (size_t i = 1; i < scales.size(); ++i) {
    if (!(scales[i] > scales[i - 1])) {
      throw std::invalid_argument("zne: scales must increase strictly");
    }
  }
}

}  // namespace

namespace {

std::vector<ExpectationEstimate> zne_measure(const Circuit& payload,
                                             const NoiseModel& noise,
                                             const std::vector<double>& scales,
                                             uint64_t shots_total, uint64_t seed,
                                             const RunOptions& options) {
  check_scales(scales);
  const uint32_t n = payload.n_data;
  PauliString observable = PauliString::identity(n);
  observable.z = (1ull << n) - 1;
  const NoiseModel realized = noise.realized(payload.total_qubits());
  const auto budget = split_shots(shots_total, scales.size());
  std::vector<ExpectationEstimate> out;
  out.reserve(scales.size());
  for (size_t i = 0; i < scales.size(); ++i) {
    const Circuit folded = fold_global(payload, scales[i]);
    const auto records = sample_shots_auto(folded, realized, budget[i],
                                           Rng::derive(seed, 1000 + i).next(), options);
    out.push_back(expectation_z_basis(records, observable, /*post_select=*/false));
  }
  return out;
}

}  // namespace

std::vector<SeriesPoint> zne_series(const Circuit& payload, const NoiseModel& noise,
                                    const std::vector<double>& scales,
                                    uint64_t shots_total, uint64_t seed,
                                    const RunOptions& options) {
  const auto estimates = zne_measure(payload, noise, scales, shots_total, seed, options);
  std::vector<SeriesPoint> series;
  series.reserve(scales.size());
  for (size_t i = 0; i < scales.size(); ++i) {
    series.push_back(SeriesPoint{scales[i], estimates[i].value, estimates[i].std_error});
  }
  return series;
}

ZnePipelineResult zne_pipeline(const Circuit& payload, const NoiseModel& noise,
                               const std::vector<double>& scales, FitKind model,
                               uint64_t shots_total, uint64_t seed,
                               const RunOptions& options) {
  const uint32_t min_points = model == FitKind::Exponential ? 3 : 2;
  if (scales.size() < min_points) {
    throw std::invalid_argument("zne_pipeline: too few scale factors for the model");
  }
  ZnePipelineResult result;
  result.per_scale = zne_measure(payload, noise, scales, shots_total, seed, options);
  std::vector<SeriesPoint> series;
  series.reserve(scales.size());
  for (size_t i = 0; i < scales.size(); ++i) {
    series.push_back(
        SeriesPoint{scales[i], result.per_scale[i].value, result.per_scale[i].std_error});
  }
  result.fit = fit_series(model, series, 0.0);
  return result;
}

}  // namespace qem
