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

#include "qemlab/frame_sampler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "qemlab/rng.hpp"
#include "qemlab/statevector.hpp"

namespace qem {

namespace {

struct Frame {
  uint64_t x = 0;
  uint64_t z = 0;
};

int quarter_turns(double theta) {
  constexpr double kHalfPi = 1.5707963267948966;
  const double steps = theta / kHalfPi;
  const long k = std::lround(steps);
  if (std::abs(steps - static_cast<double>(k)) > 1e-9) return -1;
  return static_cast<int>(((k % 4) + 4) % 4);
}

// Sign-free conjugation of the error frame by one Clifford gate.
void frame_step(Frame& f, const Gate& g) {
  switch (g.kind) {
    case GateKind::H: {
      const uint64_t bit = 1ull << g.qubits[0];
      const bool hx = f.x & bit, hz = f.z & bit;
      if (hx != hz) {
        f.x ^= bit;
        f.z ^= bit;
      }
      return;
    }
    case GateKind::S:
    case GateKind::Sdg: {
      const uint64_t bit = 1ull << g.qubits[0];
      if (f.x & bit) f.z ^= bit;
      return;
    }
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      return;  // Pauli gates only flip frame signs
    case GateKind::CX: {
      const uint64_t cb = 1ull << g.qubits[0];
      const uint64_t tb = 1ull << g.qubits[1];
      if (f.x & cb) f.x ^= tb;
      if (f.z & tb) f.z ^= cb;
      return;
    }
    case GateKind::CZ: {
      const uint64_t ab = 1ull << g.qubits[0];
      const uint64_t bb = 1ull << g.qubits[1];
      if (f.x & ab) f.z ^= bb;
      if (f.x & bb) f.z ^= ab;
      return;
    }
    case GateKind::Swap: {
      const uint32_t a = g.qubits[0], b = g.qubits[1];
      const uint64_t ab = 1ull << a, bb = 1ull << b;
      const uint64_t xa = (f.x >> a) & 1, xb = (f.x >> b) & 1;
      const uint64_t za = (f.z >> a) & 1, zb = (f.z >> b) & 1;
      f.x = (f.x & ~(ab | bb)) | (xa << b) | (xb << a);
      f.z = (f.z & ~(ab | bb)) | (za << b) | (zb << a);
      return;
    }
    case GateKind::Rx: {
      if ((quarter_turns(g.angle) & 1) == 0) return;
      const uint64_t bit = 1ull << g.qubits[0];
      if (f.z & bit) f.x ^= bit;
      return;
    }
    case GateKind::Ry: {
      if ((quarter_turns(g.angle) & 1) == 0) return;
      const uint64_t bit = 1ull << g.qubits[0];
      const bool hx = f.x & bit, hz = f.z & bit;
      if (hx != hz) {
        f.x ^= bit;
        f.z ^= bit;
      }
      return;
    }
    case GateKind::Rz: {
      if ((quarter_turns(g.angle) & 1) == 0) return;
      const uint64_t bit = 1ull << g.qubits[0];
      if (f.x & bit) f.z ^= bit;
      return;
    }
    case GateKind::CPauli: {
      const uint64_t cb = 1ull << g.qubits[0];
      const bool control_x = f.x & cb;
      const int anti = (std::popcount(f.x & g.pauli.z) ^
                        std::popcount(f.z & g.pauli.x)) & 1;
      if (control_x) {
        f.x ^= g.pauli.x;
        f.z ^= g.pauli.z;
      }
      if (anti) f.z ^= cb;
      return;
    }
    case GateKind::MeasureZ:
    case GateKind::Reset:
      throw std::logic_error("frame_step: measurement reached the frame loop");
  }
}

}  // namespace

bool frames_compatible(const Circuit& c) {
  if (!c.is_clifford()) return false;
  bool seen_measure = false;
  for (const auto& g : c.gates) {
    if (g.kind == GateKind::Reset) return false;
    if (g.kind == GateKind::MeasureZ) {
      seen_measure = true;
    } else if (seen_measure) {
      return false;  // unitary after a measurement
    }
  }
  return true;
}

std::vector<ShotRecord> run_shots_frames(const Circuit& c, const NoiseModel& noise,
                                         uint64_t shots, uint64_t seed,
                                         const RunOptions& options) {
  c.validate();
  if (shots < 1) throw std::invalid_argument("run_shots_frames: shots >= 1");
  if (!frames_compatible(c)) {
    throw std::invalid_argument("run_shots_frames: circuit is not frame-compatible");
  }
  if (c.total_qubits() > 24) {
    throw std::invalid_argument("run_shots_frames: more than 24 total qubits");
  }
  if (options.injections.size() > 8) {
    throw std::invalid_argument("run_shots_frames: at most 8 injected channels");
  }
  size_t unitary_end = c.gates.size();
  while (unitary_end > 0 && c.gates[unitary_end - 1].kind == GateKind::MeasureZ) {
    --unitary_end;
  }
  for (const auto& inj : options.injections) {
    if (inj.before_gate_index > unitary_end) {
      throw std::invalid_argument(
          "run_shots_frames: injection after the unitary prefix");
    }
  }
  if (options.injection_fired != nullptr) {
    options.injection_fired->assign(shots, 0);
  }

  // Noiseless reference distribution, solved once.
  Statevector sv(c.total_qubits());
  for (size_t i = 0; i < unitary_end; ++i) sv.apply_gate(c.gates[i]);
  std::vector<double> cdf(sv.dim());
  double acc = 0;
  for (size_t i = 0; i < sv.dim(); ++i) {
    acc += std::norm(sv.amplitudes()[i]);
    cdf[i] = acc;
  }
  const double total_mass = acc;

  const auto plan = noise_plan(c, noise);
  const uint32_t total = c.total_qubits();
  std::vector<ShotRecord> records(shots);

  auto run_range = [&](uint64_t begin, uint64_t end) {
    for (uint64_t shot = begin; shot < end; ++shot) {
      Rng rng = Rng::derive(seed, shot);
      Frame f;
      uint8_t fired = 0;
      const auto inject_at = [&](size_t gate_index) {
        for (size_t k = 0; k < options.injections.size(); ++k) {
          const InjectedChannel& inj = options.injections[k];
          if (inj.before_gate_index != gate_index) continue;
          if (rng.bernoulli(inj.rate)) {
            fired |= static_cast<uint8_t>(1u << k);
            const PauliString e = draw_uniform_pauli(inj.qubit_mask, total, rng);
            f.x ^= e.x;
            f.z ^= e.z;
          }
        }
      };
      for (size_t i = 0; i < unitary_end; ++i) {
        inject_at(i);
        frame_step(f, c.gates[i]);
        for (const NoiseSite& site : plan[i]) {
          if (rng.bernoulli(site.rate)) {
            const PauliString e = draw_noise_pauli(site, total, rng);
            f.x ^= e.x;
            f.z ^= e.z;
          }
        }
      }
      inject_at(unitary_end);
      if (options.injection_fired != nullptr) {
        (*options.injection_fired)[shot] = fired;
      }
      const double u = rng.uniform_real() * total_mass;
      const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
      const uint64_t ref = it == cdf.end() ? cdf.size() - 1
                                           : static_cast<uint64_t>(it - cdf.begin());
      const uint64_t bits = ref ^ f.x;
      ShotRecord rec;
      rec.data_bits = bits & ((1ull << c.n_data) - 1);
      rec.ancilla_bits = bits >> c.n_data;
      rec.trajectory_seed = shot;
      records[shot] = rec;
    }
  };

  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  if (threads == 1 || shots < 4096) {
    run_range(0, shots);
    return records;
  }
  std::vector<std::thread> pool;
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

std::vector<ShotRecord> sample_shots_auto(const Circuit& c, const NoiseModel& noise,
                                          uint64_t shots, uint64_t seed,
                                          const RunOptions& options) {
  if (frames_compatible(c)) {
    return run_shots_frames(c, noise, shots, seed, options);
  }
  return run_shots(c, noise, shots, seed, options);
}

namespace {

struct PrefixEvent {
  size_t gate_index;
  PauliString pauli;
};

// Full statevector replay for a shot whose prefix drew noise. The prefix
// events are fixed; suffix noise and injections re-use the shot's stream in
// the same draw order as the frame branch.
ShotRecord replay_with_prefix_events(const Circuit& c,
                                     const std::vector<std::vector<NoiseSite>>& plan,
                                     const RunOptions& options, size_t split,
                                     size_t unitary_end,
                                     const std::vector<PrefixEvent>& events,
                                     Statevector& sv, Rng& rng) {
  sv.reset_to_zero();
  const uint32_t total = c.total_qubits();
  size_t next_event = 0;
  for (size_t i = 0; i < split; ++i) {
    sv.apply_gate(c.gates[i]);
    while (next_event < events.size() && events[next_event].gate_index == i) {
      sv.apply_pauli(events[next_event].pauli);
      ++next_event;
    }
  }
  for (size_t i = split; i < unitary_end; ++i) {
    for (size_t k = 0; k < options.injections.size(); ++k) {
      const InjectedChannel& inj = options.injections[k];
      if (inj.before_gate_index == i && rng.bernoulli(inj.rate)) {
        sv.apply_pauli(draw_uniform_pauli(inj.qubit_mask, total, rng));
      }
    }
    sv.apply_gate(c.gates[i]);
    for (const NoiseSite& site : plan[i]) {
      if (rng.bernoulli(site.rate)) {
        sv.apply_pauli(draw_noise_pauli(site, total, rng));
      }
    }
  }
  for (size_t k = 0; k < options.injections.size(); ++k) {
    const InjectedChannel& inj = options.injections[k];
    if (inj.before_gate_index == unitary_end && rng.bernoulli(inj.rate)) {
      sv.apply_pauli(draw_uniform_pauli(inj.qubit_mask, total, rng));
    }
  }
  const uint64_t bits = sv.sample_outcome(rng);
  ShotRecord rec;
  rec.data_bits = bits & ((1ull << c.n_data) - 1);
  rec.ancilla_bits = bits >> c.n_data;
  return rec;
}

}  // namespace

std::vector<ShotRecord> run_shots_prefix_hybrid(const Circuit& c,
                                                const NoiseModel& noise,
                                                size_t split, uint64_t shots,
                                                uint64_t seed,
                                                const RunOptions& options) {
  c.validate();
  if (shots < 1) throw std::invalid_argument("run_shots_prefix_hybrid: shots >= 1");
  if (c.total_qubits() > 24) {
    throw std::invalid_argument("run_shots_prefix_hybrid: more than 24 total qubits");
  }
  split = std::min(split, c.gates.size());
  size_t unitary_end = c.gates.size();
  while (unitary_end > 0 && c.gates[unitary_end - 1].kind == GateKind::MeasureZ) {
    --unitary_end;
  }
  if (split > unitary_end) {
    throw std::invalid_argument("run_shots_prefix_hybrid: split inside the readout");
  }
  for (size_t i = 0; i < split; ++i) {
    if (c.gates[i].is_measurement()) {
      throw std::invalid_argument("run_shots_prefix_hybrid: measurement in the prefix");
    }
  }
  for (size_t i = split; i < unitary_end; ++i) {
    const Gate& g = c.gates[i];
    if (g.is_measurement() ||
        (g.is_rotation() && quarter_turns(g.angle) < 0)) {
      throw std::invalid_argument(
          "run_shots_prefix_hybrid: suffix must be Clifford unitaries");
    }
  }
  for (const auto& inj : options.injections) {
    if (inj.before_gate_index < split || inj.before_gate_index > unitary_end) {
      throw std::invalid_argument(
          "run_shots_prefix_hybrid: injections must sit in the Clifford suffix");
    }
  }

  // Noiseless reference through the whole unitary part, solved once.
  Statevector ref(c.total_qubits());
  for (size_t i = 0; i < unitary_end; ++i) ref.apply_gate(c.gates[i]);
  std::vector<double> cdf(ref.dim());
  double acc = 0;
  for (size_t i = 0; i < ref.dim(); ++i) {
    acc += std::norm(ref.amplitudes()[i]);
    cdf[i] = acc;
  }
  const double total_mass = acc;

  const auto plan = noise_plan(c, noise);
  const uint32_t total = c.total_qubits();
  std::vector<ShotRecord> records(shots);

  auto run_range = [&](uint64_t begin, uint64_t end) {
    Statevector scratch(c.total_qubits());
    std::vector<PrefixEvent> events;
    for (uint64_t shot = begin; shot < end; ++shot) {
      Rng rng = Rng::derive(seed, shot);
      // Prefix noise decisions first; their draw order is shared with the
      // statevector fallback.
      events.clear();
      for (size_t i = 0; i < split; ++i) {
        for (const NoiseSite& site : plan[i]) {
          if (rng.bernoulli(site.rate)) {
            events.push_back(PrefixEvent{i, draw_noise_pauli(site, total, rng)});
          }
        }
      }
      ShotRecord rec;
      if (!events.empty()) {
        rec = replay_with_prefix_events(c, plan, options, split, unitary_end,
                                        events, scratch, rng);
      } else {
        Frame f;
        for (size_t i = split; i < unitary_end; ++i) {
          for (size_t k = 0; k < options.injections.size(); ++k) {
            const InjectedChannel& inj = options.injections[k];
            if (inj.before_gate_index == i && rng.bernoulli(inj.rate)) {
              const PauliString e = draw_uniform_pauli(inj.qubit_mask, total, rng);
              f.x ^= e.x;
              f.z ^= e.z;
            }
          }
          frame_step(f, c.gates[i]);
          for (const NoiseSite& site : plan[i]) {
            if (rng.bernoulli(site.rate)) {
              const PauliString e = draw_noise_pauli(site, total, rng);
              f.x ^= e.x;
              f.z ^= e.z;
            }
          }
        }
        for (size_t k = 0; k < options.injections.size(); ++k) {
          const InjectedChannel& inj = options.injections[k];
          if (inj.before_gate_index == unitary_end && rng.bernoulli(inj.rate)) {
            const PauliString e = draw_uniform_pauli(inj.qubit_mask, total, rng);
            f.x ^= e.x;
            f.z ^= e.z;
          }
        }
        const double u = rng.uniform_real() * total_mass;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const uint64_t bits =
            (it == cdf.end() ? cdf.size() - 1
                             : static_cast<uint64_t>(it - cdf.begin())) ^
            f.x;
        rec.data_bits = bits & ((1ull << c.n_data) - 1);
        rec.ancilla_bits = bits >> c.n_data;
      }
      rec.trajectory_seed = shot;
      records[shot] = rec;
    }
  };

  unsigned threads = options.threads > 0
                         ? static_cast<unsigned>(options.threads)
                         : std::thread::hardware_concurrency();
  if (threads < 1) threads = 1;
  if (threads == 1 || shots < 2048) {
    run_range(0, shots);
    return records;
  }
  std::vector<std::thread> pool;
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

}  // namespace qem
