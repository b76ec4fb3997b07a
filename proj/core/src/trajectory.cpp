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

#include "qemlab/trajectory.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qemlab/errors.hpp"
#include "qemlab/rng.hpp"
#include "qemlab/statevector.hpp"

namespace qem {

namespace {

bool is_check_gate(const Gate& g, uint32_t n_data) {
  if (g.kind == GateKind::CPauli) return true;
  if (g.qubits[0] >= n_data) return true;
  if (g.is_two_qubit() && g.qubits[1] >= n_data) return true;
  return false;
}

void letter_masks(uint64_t letter, uint32_t q, uint64_t& x, uint64_t& z) {
  // 0 = I, 1 = X, 2 = Y, 3 = Z
  if (letter == 1 || letter == 2) x |= 1ull << q;
  if (letter == 2 || letter == 3) z |= 1ull << q;
}

}  // namespace

std::vector<std::vector<NoiseSite>> noise_plan(const Circuit& c, const NoiseModel& noise_in) {
  const NoiseModel noise = noise_in.realized(c.total_qubits());
  std::vector<std::vector<NoiseSite>> plan(c.gates.size());
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.is_measurement()) continue;
    if (!noise.noisy_checks && is_check_gate(g, c.n_data)) continue;
    auto& sites = plan[i];
    if (g.kind == GateKind::CPauli) {
      const uint32_t control = g.qubits[0];
      uint64_t support = g.pauli.x | g.pauli.z;
      while (support) {
        const uint32_t q = static_cast<uint32_t>(std::countr_zero(support));
        support &= support - 1;
        const double rate = noise.rate2(control, q);
        if (rate > 0) sites.push_back(NoiseSite{control, q, 2, rate});
      }
    } else if (g.is_two_qubit()) {
      const double rate = noise.rate2(g.qubits[0], g.qubits[1]);
      if (rate > 0) sites.push_back(NoiseSite{g.qubits[0], g.qubits[1], 2, rate});
    } else {
      const double rate = noise.rate1(g.qubits[0]);
      if (rate > 0) sites.push_back(NoiseSite{g.qubits[0], 0, 1, rate});
    }
  }
  return plan;
}

PauliString draw_noise_pauli(const NoiseSite& site, uint32_t n_total, Rng& rng) {
  PauliString p = PauliString::identity(n_total);
  if (site.arity == 1) {
    const uint64_t letter = rng.uniform(3) + 1;
    letter_masks(letter, site.q0, p.x, p.z);
  } else {
    const uint64_t v = rng.uniform(15) + 1;
    letter_masks(v >> 2, site.q0, p.x, p.z);
    letter_masks(v & 3, site.q1, p.x, p.z);
  }
  p.phase_exp = static_cast<uint8_t>(std::popcount(p.x & p.z) & 3);
  return p;
}

PauliString draw_uniform_pauli(uint64_t qubit_mask, uint32_t n_total, Rng& rng) {
  PauliString p = PauliString::identity(n_total);
  uint64_t rest = qubit_mask;
  while (rest) {
    const uint32_t q = static_cast<uint32_t>(std::countr_zero(rest));
    rest &= rest - 1;
    letter_masks(rng.uniform(4), q, p.x, p.z);
  }
  p.phase_exp = static_cast<uint8_t>(std::popcount(p.x & p.z) & 3);
  return p;
}

namespace {

// fired: bitmask over options.injections for this shot.
template <typename Apply>
void run_injections(const RunOptions& options, size_t gate_index, uint32_t n_total,
                    Rng& rng, uint8_t& fired, const Apply& apply) {
  for (size_t k = 0; k < options.injections.size(); ++k) {
    const InjectedChannel& inj = options.injections[k];
    if (inj.before_gate_index != gate_index) continue;
    if (rng.bernoulli(inj.rate)) {
      fired |= static_cast<uint8_t>(1u << k);
      apply(draw_uniform_pauli(inj.qubit_mask, n_total, rng));
    }
  }
}

ShotRecord simulate_one(const Circuit& c,
                        const std::vector<std::vector<NoiseSite>>& plan,
                        const RunOptions& options, uint64_t seed, uint64_t shot,
                        Statevector& sv, uint8_t& fired) {
  Rng rng = Rng::derive(seed, shot);
  sv.reset_to_zero();
  const uint32_t total = c.total_qubits();
  uint64_t measured_mask = 0;
  uint64_t measured_bits = 0;
  fired = 0;
  const auto apply = [&sv](const PauliString& p) { sv.apply_pauli(p); };
  for (size_t i = 0; i < c.gates.size(); ++i) {
    run_injections(options, i, total, rng, fired, apply);
    const Gate& g = c.gates[i];
    if (g.kind == GateKind::MeasureZ) {
      const uint32_t q = g.qubits[0];
      const int outcome = sv.measure(q, rng);
      measured_mask |= 1ull << q;
      measured_bits = (measured_bits & ~(1ull << q)) |
                      (static_cast<uint64_t>(outcome) << q);
      continue;
    }
    if (g.kind == GateKind::Reset) {
      sv.reset_qubit(g.qubits[0], rng);
      continue;
    }
    sv.apply_gate(g);
    for (const NoiseSite& site : plan[i]) {
      if (rng.bernoulli(site.rate)) {
        sv.apply_pauli(draw_noise_pauli(site, total, rng));
      }
    }
  }
  run_injections(options, c.gates.size(), total, rng, fired, apply);
  const uint64_t sampled = sv.sample_outcome(rng);
  const uint64_t bits = (measured_bits & measured_mask) | (sampled & ~measured_mask);
  ShotRecord rec;
  rec.data_bits = bits & ((1ull << c.n_data) - 1);
  rec.ancilla_bits = bits >> c.n_data;
  rec.trajectory_seed = shot;
  return rec;
}

}  // namespace

std::vector<ShotRecord> run_shots(const Circuit& c, const NoiseModel& noise,
                                  uint64_t shots, uint64_t seed,
                                  const RunOptions& options) {
  c.validate();
  if (shots < 1) throw std::invalid_argument("run_shots: shots >= 1");
  if (c.total_qubits() > 24) {
    throw std::invalid_argument("run_shots: more than 24 total qubits");
  }
  if (options.injections.size() > 8) {
    throw std::invalid_argument("run_shots: at most 8 injected channels");
  }
  const auto plan = noise_plan(c, noise);
  std::vector<ShotRecord> records(shots);
  if (options.injection_fired != nullptr) {
    options.injection_fired->assign(shots, 0);
  }
  auto run_range = [&](uint64_t begin, uint64_t end) {
    Statevector sv(c.total_qubits());
    for (uint64_t shot = begin; shot < end; ++shot) {
      uint8_t fired = 0;
      records[shot] = simulate_one(c, plan, options, seed, shot, sv, fired);
      if (options.injection_fired != nullptr) {
        (*options.injection_fired)[shot] = fired;
      }
    }
  };

  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  if (threads == 1 || shots < 256) {
    run_range(0, shots);
    return records;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const uint64_t chunk = (shots + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const uint64_t begin = t * chunk;
    const uint64_t end = std::min(shots, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(run_range, begin, end);
  }
  for (auto& th : pool) th.join();
  return records;
}

ExpectationEstimate expectation_z_basis(std::span<const ShotRecord> records,
                                        const PauliString& observable,
                                        bool post_select) {
  if (observable.x != 0) {
    throw std::invalid_argument("expectation_z_basis: observable must be I/Z only");
  }
  if (!observable.is_hermitian()) {
    throw std::invalid_argument("expectation_z_basis: observable must be Hermitian");
  }
  const int sign = observable.real_sign();
  uint64_t kept = 0;
  int64_t sum = 0;
  for (const auto& rec : records) {
    if (post_select && rec.ancilla_bits != 0) continue;
    ++kept;
    const int par = std::popcount(rec.data_bits & observable.z) & 1;
    sum += par ? -1 : 1;
  }
  if (kept == 0) {
    throw PostselectionStarved("expectation_z_basis: post-selection starved");
  }
  ExpectationEstimate est;
  est.kept_shots = kept;
  est.total_shots = records.size();
  est.value = sign * static_cast<double>(sum) / static_cast<double>(kept);
  if (kept >= 2) {
    const double mean = static_cast<double>(sum) / static_cast<double>(kept);
    const double var = (1.0 - mean * mean) * static_cast<double>(kept) /
                       static_cast<double>(kept - 1);
    est.std_error = std::sqrt(std::max(0.0, var) / static_cast<double>(kept));
  }
  return est;
}

}  // namespace qem
