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

#include "qemlab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <stdexcept>

#include "qemlab/circuit_ops.hpp"
#include "qemlab/errors.hpp"
#include "qemlab/frame_sampler.hpp"
#include "qemlab/pipelines.hpp"
#include "qemlab/statevector.hpp"

namespace qem {

namespace fs = std::filesystem;

std::string csv_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

namespace {

std::string scales_label(const std::vector<double>& scales) {
  std::string s = "[";
  for (size_t i = 0; i < scales.size(); ++i) {
    if (i) s += ';';
    s += csv_double(scales[i]);
  }
  s += "]";
  return s;
}

Circuit find_plus_one_circuit(uint32_t n, uint32_t depth, Rng& search_rng,
                              uint64_t retry_cap) {
  for (uint64_t attempt = 0; attempt < retry_cap; ++attempt) {
    const uint64_t circuit_seed = search_rng.next();
    Circuit c = random_clifford_circuit(n, depth, circuit_seed);
    if (ideal_z_parity(c) == +1) return c;
  }
  throw std::runtime_error("heatmap: no ideal +1 circuit found within the retry cap");
}

std::string bits_to_string(uint64_t bits, uint32_t width) {
  std::string s(width, '0');
  for (uint32_t q = 0; q < width; ++q) {
    if ((bits >> q) & 1) s[q] = '1';
  }
  return s;
}

uint64_t fnv1a(const std::vector<uint8_t>& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const uint8_t b : bytes) {
    h ^= b;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory: " + dir);
}

}  // namespace

HeatmapResult run_heatmap(const HeatmapManifest& manifest) {
  if (manifest.qubits.empty() || manifest.depths.empty()) {
    throw std::invalid_argument("heatmap: empty grid");
  }
  HeatmapResult result;
  RunOptions run_options;
  run_options.threads = manifest.threads;
  uint64_t cell_index = 0;
  for (const uint32_t n : manifest.qubits) {
    for (const uint32_t depth : manifest.depths) {
      const uint64_t cell_seed = Rng::derive(manifest.seed, cell_index++).next();
      PauliString observable = PauliString::identity(n);
      observable.z = (1ull << n) - 1;
      // Half the system size, floored at the model's minimum point count
      // (3 checks for a 4-qubit register, as in the shadow experiments).
      const uint32_t min_points = manifest.pce_model == FitKind::Linear ? 2u : 3u;
      const uint32_t checks = std::min(n, std::max(n / 2, min_points));

      double pce_sum = 0;
      double unmit_sum = 0;
      // mean |error| per (scale set, model)
      std::vector<std::vector<double>> zne_sums(
          manifest.scale_sets.size(),
          std::vector<double>(manifest.zne_models.size(), 0));
      HeatmapCell cell;
      cell.n = n;
      cell.depth = depth;

      for (uint32_t inst = 0; inst < manifest.circuits_per_cell; ++inst) {
        Rng inst_rng = Rng::derive(cell_seed, inst);
        const Circuit payload = find_plus_one_circuit(n, depth, inst_rng,
                                                      manifest.retry_cap);
        cell.circuit_seeds.push_back(payload.metadata.seed);

        const uint64_t seed_unmit = inst_rng.next();
        const uint64_t seed_pce = inst_rng.next();
        const auto unmit_records = sample_shots_auto(payload, manifest.noise,
                                                     manifest.shots, seed_unmit,
                                                     run_options);
        const auto unmit =
            expectation_z_basis(unmit_records, observable, /*post_select=*/false);
        unmit_sum += std::abs(unmit.value - 1.0);

        const auto pce = pce_pipeline(payload, manifest.noise, checks,
                                      manifest.pce_model, manifest.shots, seed_pce,
                                      run_options);
        pce_sum += std::abs(pce.fit.extrapolated - 1.0);

        for (size_t s = 0; s < manifest.scale_sets.size(); ++s) {
          const uint64_t seed_set = inst_rng.next();
          const auto series = zne_series(payload, manifest.noise,
                                         manifest.scale_sets[s], manifest.shots,
                                         seed_set, run_options);
          for (size_t mdl = 0; mdl < manifest.zne_models.size(); ++mdl) {
            const auto fit = fit_series(manifest.zne_models[mdl], series, 0.0);
            zne_sums[s][mdl] += std::abs(fit.extrapolated - 1.0);
          }
        }
      }

      const double denom = static_cast<double>(manifest.circuits_per_cell);
      cell.pce_err = pce_sum / denom;
      cell.unmitigated_err = unmit_sum / denom;
      double best = -1;
      for (size_t s = 0; s < manifest.scale_sets.size(); ++s) {
        for (size_t mdl = 0; mdl < manifest.zne_models.size(); ++mdl) {
          const double err = zne_sums[s][mdl] / denom;
          if (best < 0 || err < best) {
            best = err;
            cell.best_zne_err = err;
            cell.best_zne_label = fit_kind_name(manifest.zne_models[mdl]) +
                                  scales_label(manifest.scale_sets[s]);
          }
        }
      }
      cell.diff = cell.best_zne_err - cell.pce_err;
      result.cells.push_back(std::move(cell));
    }
  }
  return result;
}

MarkovResult run_markov_check(const MarkovManifest& manifest) {
  if (manifest.n < 1 || manifest.n > 8) {
    throw std::invalid_argument("markov-check: n in [1, 8]");
  }
  if (!(manifest.epsilon >= 0 && manifest.epsilon <= 1)) {
    throw std::invalid_argument("markov-check: epsilon in [0, 1]");
  }
  Circuit payload;
  payload.n_data = manifest.n;
  payload.metadata.label = "markov_identity_payload";

  NoiseModel noiseless;
  noiseless.noisy_checks = false;

  MarkovResult result;
  for (uint32_t m = 0; m <= manifest.max_layers; ++m) {
    SandwichPlan plan;
    plan.payload = payload;
    for (uint32_t j = 0; j < m; ++j) {
      const auto pair = find_check_pair(payload, PauliString::single_z(manifest.n, j));
      plan.layers.push_back(pair.value());
    }
    const SandwichCircuit sandwich = build_sandwich(plan);

    RunOptions options;
    options.threads = manifest.threads;
    options.injections.push_back(InjectedChannel{
        sandwich.payload_begin, manifest.epsilon, (1ull << manifest.n) - 1});
    std::vector<uint8_t> fired;
    options.injection_fired = &fired;
    const auto records = run_shots_frames(sandwich.circuit, noiseless, manifest.shots,
                                          Rng::derive(manifest.seed, m).next(), options);
    uint64_t kept = 0;
    uint64_t logical = 0;
    for (uint64_t i = 0; i < records.size(); ++i) {
      if (records[i].ancilla_bits != 0) continue;
      ++kept;
      if (fired[i] & 1) ++logical;
    }
    if (kept == 0) {
      throw PostselectionStarved("markov-check: no kept shots", m);
    }
    MarkovRow row;
    row.m = m;
    row.epsilon = manifest.epsilon;
    row.predicted = markov_logical_error(MarkovModel{manifest.epsilon, 0, 0, 1}, m);
    row.empirical = static_cast<double>(logical) / static_cast<double>(kept);
    row.kept_shots = kept;
    row.total_shots = manifest.shots;
    result.rows.push_back(row);
  }
  return result;
}

namespace {

struct ShadowPools {
  ShadowSet unprotected;
  RsCalibration calibration;
  std::map<uint32_t, ShadowSet> check;      // clifford_only, layer -> pool
  std::map<uint32_t, ShadowSet> prepcheck;  // full_circuit, layer -> pool
};

double extrapolated_estimate(const std::map<uint32_t, ShadowSet>& pools,
                             const PauliString& obs, const EstimatorConfig& cfg,
                             uint32_t subset, uint32_t checks_used, FitKind model,
                             double target) {
  std::vector<SeriesPoint> series;
  for (uint32_t layers = 1; layers <= checks_used; ++layers) {
    const double value = estimate_pauli(pools.at(layers), obs, cfg, subset);
    series.push_back(SeriesPoint{static_cast<double>(layers), value, 0});
  }
  return fit_series(model, series, target).extrapolated;
}

void dump_sample_log(const std::string& path, const ShadowSet& set) {
  std::string csv = "circuit_idx,seed,clifford_id,outcome_bits,kept,layers\n";
  for (const auto& shot : set.shots) {
    const auto key = set.cliffords[shot.circuit_idx].key();
    char id[20];
    std::snprintf(id, sizeof id, "%016llx",
                  static_cast<unsigned long long>(fnv1a(key)));
    csv += std::to_string(shot.circuit_idx) + "," +
           std::to_string(set.circuit_seeds[shot.circuit_idx]) + "," + id + "," +
           bits_to_string(shot.outcome, set.n_data) + "," +
           (shot.kept ? "1" : "0") + "," + std::to_string(set.layers) + "\n";
  }
  write_text_file(path, csv);
}

}  // namespace

ShadowCompareResult run_shadow_compare(const ShadowCompareManifest& manifest) {
  const uint32_t n = manifest.n;
  for (const uint32_t subset : manifest.estimator.subset_sizes) {
    if (subset == 0 || subset > manifest.estimator.shadow_circuits ||
        subset % manifest.estimator.n_groups != 0) {
      throw std::invalid_argument(
          "shadow-compare: subset sizes must divide into the groups and fit the pool");
    }
  }
  for (uint32_t layers = 1; layers <= manifest.checks_used; ++layers) {
    if (std::find(manifest.implemented_layers.begin(), manifest.implemented_layers.end(),
                  layers) == manifest.implemented_layers.end()) {
      throw std::invalid_argument(
          "shadow-compare: implemented_layers must cover 1..checks_used");
    }
  }
  // Full-circuit extrapolation uses the contiguous 1..k prefix of the
  // available prepcheck layers (zero disables it).
  uint32_t prep_checks_used = 0;
  {
    const uint32_t min_points = manifest.model == FitKind::Linear ? 2 : 3;
    uint32_t k = 0;
    while (std::find(manifest.prepcheck_layers.begin(), manifest.prepcheck_layers.end(),
                     k + 1) != manifest.prepcheck_layers.end()) {
      ++k;
    }
    k = std::min(k, manifest.checks_used);
    prep_checks_used = k >= min_points ? k : 0;
  }

  const Circuit prep = standin_prep(n, manifest.prep_layers, manifest.prep_seed,
                                    manifest.prep_checkable);
  std::vector<PauliString> observables = default_z_observables(n);
  for (const auto& literal : manifest.extra_observables) {
    PauliString p = parse_pauli(literal);
    if (p.num_qubits != n) {
      throw std::invalid_argument("shadow-compare: observable width mismatch: " + literal);
    }
    observables.push_back(p);
  }

  // Exact noiseless reference values.
  Statevector ideal_state(n);
  for (const auto& g : prep.gates) ideal_state.apply_gate(g);
  std::vector<double> ideal(observables.size());
  for (size_t i = 0; i < observables.size(); ++i) {
    ideal[i] = ideal_state.expectation(observables[i]);
  }

  ShadowOptions opts;
  opts.threads = manifest.threads;

  ShadowPools pools;
  pools.unprotected = collect_shadows(prep, manifest.noise, manifest.estimator,
                                      Protection::None, 0,
                                      Rng::derive(manifest.seed, 1).next(), opts);
  pools.calibration = rs_calibrate(manifest.noise, n, manifest.rs_rounds,
                                   manifest.estimator,
                                   Rng::derive(manifest.seed, 2).next(), opts);
  for (const uint32_t layers : manifest.implemented_layers) {
    pools.check.emplace(layers,
                        collect_shadows(prep, manifest.noise, manifest.estimator,
                                        Protection::CliffordOnly, layers,
                                        Rng::derive(manifest.seed, 100 + layers).next(),
                                        opts));
  }
  for (const uint32_t layers : manifest.prepcheck_layers) {
    pools.prepcheck.emplace(
        layers, collect_shadows(prep, manifest.noise, manifest.estimator,
                                Protection::FullCircuit, layers,
                                Rng::derive(manifest.seed, 200 + layers).next(), opts));
  }

  const uint32_t target = max_checks(n, CheckBasis::ZBasis);
  const std::string target_str = std::to_string(target);
  ShadowCompareResult result;
  std::map<std::pair<uint32_t, std::string>, std::pair<double, uint64_t>> sums;

  auto add_row = [&](uint32_t subset, const std::string& method, size_t obs_idx,
                     double estimate) {
    ShadowCompareRow row;
    row.observable = to_string(observables[obs_idx]);
    row.subset = subset;
    row.method = method;
    row.estimate = estimate;
    row.abs_error = std::abs(estimate - ideal[obs_idx]);
    result.rows.push_back(row);
    auto& acc = sums[{subset, method}];
    acc.first += row.abs_error;
    ++acc.second;
  };

  for (const uint32_t subset : manifest.estimator.subset_sizes) {
    for (size_t i = 0; i < observables.size(); ++i) {
      const PauliString& obs = observables[i];
      add_row(subset, "ideal", i, ideal[i]);
      add_row(subset, "unmitigated", i,
              estimate_pauli(pools.unprotected, obs, manifest.estimator, subset));
      add_row(subset, "robust", i,
              rs_estimate(pools.unprotected, obs, pools.calibration,
                          manifest.estimator, subset));
      for (const uint32_t layers : manifest.implemented_layers) {
        add_row(subset, "check" + std::to_string(layers), i,
                estimate_pauli(pools.check.at(layers), obs, manifest.estimator, subset));
      }
      add_row(subset, "check_extrap" + target_str, i,
              extrapolated_estimate(pools.check, obs, manifest.estimator, subset,
                                    manifest.checks_used, manifest.model,
                                    static_cast<double>(target)));
      for (const uint32_t layers : manifest.prepcheck_layers) {
        add_row(subset, "prepcheck" + std::to_string(layers), i,
                estimate_pauli(pools.prepcheck.at(layers), obs, manifest.estimator,
                               subset));
      }
      if (prep_checks_used > 0) {
        add_row(subset, "prepcheck_extrap" + target_str, i,
                extrapolated_estimate(pools.prepcheck, obs, manifest.estimator, subset,
                                      prep_checks_used, manifest.model,
                                      static_cast<double>(target)));
      }
    }
  }
  for (const auto& [key, acc] : sums) {
    ShadowMethodSummary s;
    s.subset = key.first;
    s.method = key.second;
    s.mean_abs_error = acc.first / static_cast<double>(acc.second);
    result.summary.push_back(s);
  }

  if (manifest.dump_samples) {
    ensure_dir(manifest.out_dir);
    dump_sample_log(manifest.out_dir + "/samples_unmitigated.csv", pools.unprotected);
    for (const auto& [layers, set] : pools.check) {
      dump_sample_log(manifest.out_dir + "/samples_check" + std::to_string(layers) +
                          ".csv",
                      set);
    }
    for (const auto& [layers, set] : pools.prepcheck) {
      dump_sample_log(manifest.out_dir + "/samples_prepcheck" +
                          std::to_string(layers) + ".csv",
                      set);
    }
  }
  return result;
}

void write_heatmap_outputs(const HeatmapManifest& manifest, const HeatmapResult& result) {
  ensure_dir(manifest.out_dir);
  std::string csv = "n,depth,pce_err,best_zne_err,best_zne_label,diff\n";
  for (const auto& cell : result.cells) {
    csv += std::to_string(cell.n) + "," + std::to_string(cell.depth) + "," +
           csv_double(cell.pce_err) + "," + csv_double(cell.best_zne_err) + "," +
           cell.best_zne_label + "," + csv_double(cell.diff) + "\n";
  }
  write_text_file(manifest.out_dir + "/heatmap.csv", csv);

  std::string detail = "n,depth,instance,circuit_seed\n";
  for (const auto& cell : result.cells) {
    for (size_t i = 0; i < cell.circuit_seeds.size(); ++i) {
      detail += std::to_string(cell.n) + "," + std::to_string(cell.depth) + "," +
                std::to_string(i) + "," + std::to_string(cell.circuit_seeds[i]) + "\n";
    }
  }
  write_text_file(manifest.out_dir + "/heatmap_instances.csv", detail);
  write_text_file(manifest.out_dir + "/manifest_used.json", to_json_text(manifest));
  write_text_file(manifest.out_dir + "/noise_realized.json",
                  manifest.noise.realized(24).to_json_text());
}

void write_markov_outputs(const MarkovManifest& manifest, const MarkovResult& result) {
  ensure_dir(manifest.out_dir);
  std::string csv = "m,epsilon,predicted,empirical,kept_shots,total_shots\n";
  for (const auto& row : result.rows) {
    csv += std::to_string(row.m) + "," + csv_double(row.epsilon) + "," +
           csv_double(row.predicted) + "," + csv_double(row.empirical) + "," +
           std::to_string(row.kept_shots) + "," + std::to_string(row.total_shots) + "\n";
  }
  write_text_file(manifest.out_dir + "/markov.csv", csv);
  write_text_file(manifest.out_dir + "/manifest_used.json", to_json_text(manifest));
}

void write_shadow_compare_outputs(const ShadowCompareManifest& manifest,
                                  const ShadowCompareResult& result) {
  ensure_dir(manifest.out_dir);
  std::string csv = "observable,N,method,estimate,abs_error\n";
  for (const auto& row : result.rows) {
    csv += row.observable + "," + std::to_string(row.subset) + "," + row.method + "," +
           csv_double(row.estimate) + "," + csv_double(row.abs_error) + "\n";
  }
  write_text_file(manifest.out_dir + "/estimates.csv", csv);

  std::string summary = "N,method,mean_abs_error\n";
  for (const auto& s : result.summary) {
    summary += std::to_string(s.subset) + "," + s.method + "," +
               csv_double(s.mean_abs_error) + "\n";
  }
  write_text_file(manifest.out_dir + "/summary.csv", summary);
  write_text_file(manifest.out_dir + "/manifest_used.json", to_json_text(manifest));
  uint32_t max_layers = 0;
  for (const uint32_t layers : manifest.implemented_layers) {
    max_layers = std::max(max_layers, layers);
  }
  for (const uint32_t layers : manifest.prepcheck_layers) {
    max_layers = std::max(max_layers, layers);
  }
  write_text_file(manifest.out_dir + "/noise_realized.json",
                  manifest.noise.realized(manifest.n + max_layers).to_json_text());
}

}  // namespace qem
