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

#include "qemlab/shadows.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qemlab/circuit_ops.hpp"
#include "qemlab/errors.hpp"
#include "qemlab/frame_sampler.hpp"
#include "qemlab/rng.hpp"
#include "qemlab/stabilizer.hpp"
#include "qemlab/trajectory.hpp"

namespace qem {

const char* protection_name(Protection p) {
  switch (p) {
    case Protection::None: return "none";
    case Protection::CliffordOnly: return "clifford_only";
    case Protection::FullCircuit: return "full_circuit";
  }
  return "?";
}

namespace {

struct ShadowCircuit {
  SampledClifford clifford;
  SandwichCircuit sandwich;
};

ShadowCircuit build_shadow_circuit(const Circuit& prep, Protection protection,
                                   uint32_t layers, Rng& rng) {
  const uint32_t n = prep.n_data;
  ShadowCircuit out;
  out.clifford = sample_random_clifford(n, rng);

  Circuit combined = prep;
  combined.metadata.label = "shadow";
  const size_t clifford_begin = combined.gates.size();
  const auto clifford_gates = ops_to_gates(out.clifford.ops);
  combined.gates.insert(combined.gates.end(), clifford_gates.begin(),
                        clifford_gates.end());

  SandwichPlan plan;
  plan.payload = combined;
  plan.scope = protection == Protection::CliffordOnly ? CheckScope::CliffordOnly
                                                      : CheckScope::FullCircuit;
  plan.region_begin = protection == Protection::CliffordOnly ? clifford_begin : 0;
  plan.region_end = combined.gates.size();
  for (uint32_t j = 0; j < layers; ++j) {
    const auto pair = find_check_pair(combined, PauliString::single_z(n, j),
                                      plan.region_begin, plan.region_end);
    if (!pair.has_value()) {
      throw std::invalid_argument(
          std::string("collect_shadows: no check pair for right ") +
          to_string(PauliString::single_z(n, j)) + " through the protected region");
    }
    plan.layers.push_back(*pair);
  }
  out.sandwich = build_sandwich(plan);
  return out;
}

}  // namespace

ShadowSet collect_shadows(const Circuit& prep, const NoiseModel& noise,
                          const EstimatorConfig& cfg, Protection protection,
                          uint32_t layers, uint64_t seed,
                          const ShadowOptions& options) {
  prep.validate();
  if (prep.n_ancilla != 0) {
    throw std::invalid_argument("collect_shadows: prep must not have ancillas");
  }
  if (protection == Protection::None && layers != 0) {
    throw std::invalid_argument("collect_shadows: unprotected run cannot have layers");
  }
  const uint32_t n = prep.n_data;
  if (layers > max_checks(n, CheckBasis::ZBasis)) {
    throw std::invalid_argument("collect_shadows: layers exceed max_checks");
  }
  const NoiseModel realized = noise.realized(n + layers);

  ShadowSet set;
  set.n_data = n;
  set.protection = protection;
  set.layers = layers;
  set.shots_per_circuit = cfg.shots_per_circuit;
  set.cliffords.resize(cfg.shadow_circuits);
  set.circuit_seeds.resize(cfg.shadow_circuits);
  set.shots.resize(static_cast<size_t>(cfg.shadow_circuits) * cfg.shots_per_circuit);

  auto run_range = [&](uint32_t begin, uint32_t end) {
    for (uint32_t idx = begin; idx < end; ++idx) {
      Rng rng = Rng::derive(seed, idx);
      const ShadowCircuit sc = build_shadow_circuit(prep, protection, layers, rng);
      const uint64_t shot_seed = rng.next();
      set.cliffords[idx] = sc.clifford.tableau;
      set.circuit_seeds[idx] = shot_seed;

      RunOptions run_options;
      run_options.threads = 1;
      if (options.global_depol_after_clifford > 0) {
        run_options.injections.push_back(InjectedChannel{
            sc.sandwich.payload_end, options.global_depol_after_clifford,
            (1ull << n) - 1});
      }
      // Rotations appear only in the preparation prefix, so the hybrid
      // sampler rides the Pauli frame on every shot without a prefix event.
      size_t split = 0;
      const auto& gates = sc.sandwich.circuit.gates;
      for (size_t i = 0; i < gates.size(); ++i) {
        if (gates[i].is_rotation()) split = i + 1;
      }
      const auto records = run_shots_prefix_hybrid(sc.sandwich.circuit, realized,
                                                   split, cfg.shots_per_circuit,
                                                   shot_seed, run_options);
      for (uint32_t s = 0; s < cfg.shots_per_circuit; ++s) {
        ShadowShot shot;
        shot.circuit_idx = idx;
        shot.outcome = records[s].data_bits;
        shot.kept = records[s].ancilla_bits == 0;
        set.shots[static_cast<size_t>(idx) * cfg.shots_per_circuit + s] = shot;
      }
    }
  };

  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  if (threads == 1 || cfg.shadow_circuits < 64) {
    run_range(0, cfg.shadow_circuits);
  } else {
    std::vector<std::thread> pool;
    const uint32_t chunk = (cfg.shadow_circuits + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const uint32_t begin = t * chunk;
      const uint32_t end = std::min(cfg.shadow_circuits, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }
  return set;
}

int snapshot_eigenvalue(const CliffordTableau& u, uint64_t outcome,
                        const PauliString& observable) {
  const PauliString image = u.conjugate(observable);
  if (image.x != 0) return 0;
  const int sign = image.real_sign();
  const int par = std::popcount(image.z & outcome) & 1;
  return par ? -sign : sign;
}

namespace {

double median_of_group_means(const ShadowSet& samples, const PauliString& observable,
                             const EstimatorConfig& cfg, uint32_t use_circuits,
                             double snapshot_scale) {
  if (observable.num_qubits != samples.n_data) {
    throw std::invalid_argument("estimate_pauli: observable width mismatch");
  }
  if (observable.is_identity_up_to_phase()) {
    throw std::invalid_argument("estimate_pauli: observable must be traceless");
  }
  const uint32_t total_circuits = samples.num_circuits();
  const uint32_t n_used = use_circuits == 0 ? total_circuits
                                            : std::min(use_circuits, total_circuits);
  const uint32_t groups = cfg.n_groups;
  if (groups < 1 || n_used < groups) {
    throw std::invalid_argument("estimate_pauli: fewer circuits than groups");
  }
  // Conjugation is per circuit; shots of one circuit share the image.
  std::vector<double> group_sum(groups, 0);
  std::vector<uint64_t> group_kept(groups, 0);
  uint64_t kept_total = 0;
  for (uint32_t c = 0; c < n_used; ++c) {
    const PauliString image = samples.cliffords[c].conjugate(observable);
    const bool diagonal = image.x == 0;
    const int sign = diagonal ? image.real_sign() : 0;
    const uint32_t g = static_cast<uint32_t>(
        (static_cast<uint64_t>(c) * groups) / n_used);
    const size_t base = static_cast<size_t>(c) * samples.shots_per_circuit;
    for (uint32_t s = 0; s < samples.shots_per_circuit; ++s) {
      const ShadowShot& shot = samples.shots[base + s];
      if (!shot.kept) continue;
      ++group_kept[g];
      ++kept_total;
      if (!diagonal) continue;
      const int par = std::popcount(image.z & shot.outcome) & 1;
      group_sum[g] += (par ? -sign : sign) * snapshot_scale;
    }
  }
  if (kept_total < groups) {
    throw PostselectionStarved("estimate_pauli: fewer kept samples than groups",
                               samples.layers);
  }
  std::vector<double> means(groups);
  for (uint32_t g = 0; g < groups; ++g) {
    if (group_kept[g] == 0) {
      throw PostselectionStarved("estimate_pauli: group " + std::to_string(g) +
                                     " starved",
                                 samples.layers);
    }
    means[g] = group_sum[g] / static_cast<double>(group_kept[g]);
  }
  std::sort(means.begin(), means.end());
  if (groups & 1) return means[groups / 2];
  return 0.5 * (means[groups / 2 - 1] + means[groups / 2]);
}

}  // namespace

double estimate_pauli(const ShadowSet& samples, const PauliString& observable,
                      const EstimatorConfig& cfg, uint32_t use_circuits) {
  const double d = static_cast<double>(1ull << samples.n_data);
  return median_of_group_means(samples, observable, cfg, use_circuits, d + 1.0);
}

RsCalibration rs_calibrate(const NoiseModel& noise, uint32_t n, uint64_t rounds,
                           const EstimatorConfig& cfg, uint64_t seed,
                           const ShadowOptions& options) {
  if (rounds < cfg.n_groups) {
    throw std::invalid_argument("rs_calibrate: rounds >= n_groups");
  }
  const double d = static_cast<double>(1ull << n);
  const NoiseModel realized = noise.realized(n);
  std::vector<double> f(rounds);

  auto run_range = [&](uint64_t begin, uint64_t end) {
    for (uint64_t r = begin; r < end; ++r) {
      Rng rng = Rng::derive(seed, r);
      const SampledClifford sampled = sample_random_clifford(n, rng);
      Circuit circuit;
      circuit.n_data = n;
      circuit.gates = ops_to_gates(sampled.ops);
      RunOptions run_options;
      run_options.threads = 1;
      if (options.global_depol_after_clifford > 0) {
        run_options.injections.push_back(InjectedChannel{
            circuit.gates.size(), options.global_depol_after_clifford,
            (1ull << n) - 1});
      }
      const auto records =
          sample_shots_auto(circuit, realized, 1, rng.next(), run_options);
      const StabilizerState ideal(sampled.tableau);
      const double p_ideal = ideal.probability_of(records[0].data_bits);
      f[r] = (d * p_ideal - 1.0) / (d - 1.0);
    }
  };

  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  if (threads == 1 || rounds < 512) {
    run_range(0, rounds);
  } else {
    std::vector<std::thread> pool;
    const uint64_t chunk = (rounds + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const uint64_t begin = t * chunk;
      const uint64_t end = std::min(rounds, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back(run_range, begin, end);
    }
    for (auto& th : pool) th.join();
  }

  std::vector<double> means(cfg.n_groups, 0);
  std::vector<uint64_t> counts(cfg.n_groups, 0);
  for (uint64_t r = 0; r < rounds; ++r) {
    const uint32_t g = static_cast<uint32_t>((r * cfg.n_groups) / rounds);
    means[g] += f[r];
    ++counts[g];
  }
  for (uint32_t g = 0; g < cfg.n_groups; ++g) {
    means[g] /= static_cast<double>(counts[g]);
  }
  std::sort(means.begin(), means.end());
  RsCalibration cal;
  cal.rounds = rounds;
  cal.f_hat = (cfg.n_groups & 1)
                  ? means[cfg.n_groups / 2]
                  : 0.5 * (means[cfg.n_groups / 2 - 1] + means[cfg.n_groups / 2]);
  return cal;
}

double rs_estimate(const ShadowSet& samples, const PauliString& observable,
                   const RsCalibration& cal, const EstimatorConfig& cfg,
                   uint32_t use_circuits) {
  // The snapshot inverse 1/f_hat is meaningful only for a strictly positive
  // eigenvalue estimate; the noiseless value is 1/(d+1) and noise shrinks it
  // toward zero.
  if (!(cal.f_hat > 0)) {
    throw std::invalid_argument("rs_estimate: degenerate calibration (f_hat <= 0)");
  }
  return median_of_group_means(samples, observable, cfg, use_circuits,
                               1.0 / cal.f_hat);
}

uint64_t rs_sample_count(double epsilon, double delta, double d, double f_z) {
  if (!(epsilon > 0 && epsilon < 1) || !(delta > 0 && delta < 1)) {
    throw std::invalid_argument("rs_sample_count: epsilon, delta in (0, 1)");
  }
  if (!(d >= 2) || !(f_z > 1.0 / d)) {
    throw std::invalid_argument("rs_sample_count: need d >= 2 and f_z > 1/d");
  }
  const double r = 136.0 * std::log(2.0 / delta) * (1.0 + epsilon * epsilon) *
                   (1.0 + 1.0 / d) * (1.0 + 1.0 / d) /
                   (epsilon * epsilon * (f_z - 1.0 / d) * (f_z - 1.0 / d));
  return static_cast<uint64_t>(std::ceil(r));
}

std::vector<PceShadowEstimate> pce_shadow_estimate(
    const Circuit& prep, const NoiseModel& noise, const EstimatorConfig& cfg,
    const std::vector<PauliString>& observables, uint32_t checks_used,
    FitKind model, Protection protection, uint64_t seed,
    const ShadowOptions& options) {
  if (protection == Protection::None) {
    throw std::invalid_argument("pce_shadow_estimate: needs a protection scope");
  }
  const uint32_t min_points = model == FitKind::Linear ? 2 : 3;
  if (checks_used < min_points) {
    throw std::invalid_argument("pce_shadow_estimate: too few check layers for the model");
  }
  const uint32_t n = prep.n_data;
  const double target = static_cast<double>(max_checks(n, CheckBasis::ZBasis));

  std::vector<ShadowSet> pools;
  pools.reserve(checks_used);
  for (uint32_t layers = 1; layers <= checks_used; ++layers) {
    pools.push_back(collect_shadows(prep, noise, cfg, protection, layers,
                                    Rng::derive(seed, layers).next(), options));
  }
  std::vector<PceShadowEstimate> out;
  out.reserve(observables.size());
  for (const auto& obs : observables) {
    PceShadowEstimate est;
    est.observable = obs;
    std::vector<SeriesPoint> series;
    series.reserve(checks_used);
    for (uint32_t layers = 1; layers <= checks_used; ++layers) {
      const double value = estimate_pauli(pools[layers - 1], obs, cfg);
      est.per_layer.push_back(value);
      series.push_back(SeriesPoint{static_cast<double>(layers), value, 0});
    }
    est.fit = fit_series(model, series, target);
    out.push_back(std::move(est));
  }
  return out;
}

std::vector<PauliString> default_z_observables(uint32_t n) {
  std::vector<PauliString> obs;
  for (uint32_t q = 0; q < n; ++q) obs.push_back(PauliString::single_z(n, q));
  for (uint32_t a = 0; a < n; ++a) {
    for (uint32_t b = a + 1; b < n; ++b) {
      PauliString p = PauliString::identity(n);
      p.z = (1ull << a) | (1ull << b);
      obs.push_back(p);
    }
  }
  return obs;
}

}  // namespace qem
