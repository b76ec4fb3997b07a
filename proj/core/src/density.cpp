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

#include "qemlab/density.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "qemlab/errors.hpp"
#include "qemlab/trajectory.hpp"

namespace qem {

namespace {

std::complex<double> phase_i_pow(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

Gate shift_gate(const Gate& g, uint32_t offset) {
  Gate out = g;
  out.qubits[0] += offset;
  if (g.is_two_qubit()) out.qubits[1] += offset;
  if (g.kind == GateKind::CPauli) {
    PauliString p = g.pauli.widened(g.pauli.num_qubits + offset);
    p.x <<= offset;
    p.z <<= offset;
    out.pauli = p;
  }
  return out;
}

Gate conj_gate_matrix(const Gate& g) {
  // Complex conjugate of the gate matrix, as a gate (Y is handled upstream).
  Gate out = g;
  switch (g.kind) {
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::Rx:
    case GateKind::Rz:
      out.angle = -g.angle;
      break;
    case GateKind::CPauli: {
      PauliString p = g.pauli;
      p.phase_exp = static_cast<uint8_t>((4 - p.phase_exp) & 3);
      out.pauli = p;
      break;
    }
    default:
      break;  // H, X, Z, CX, CZ, Swap, Ry are real
  }
  return out;
}

PauliString conj_pauli_matrix(const PauliString& p) {
  // X^x Z^z is a real matrix, so only the i^k prefix conjugates.
  PauliString out = p;
  out.phase_exp = static_cast<uint8_t>((4 - p.phase_exp) & 3);
  return out;
}

// rho -> P rho P^dagger on the vectorized state.
void two_sided_pauli(Statevector& vec, uint32_t n, const PauliString& p) {
  PauliString ket = p.widened(2 * n);
  ket.x <<= n;
  ket.z <<= n;
  vec.apply_pauli(ket);
  vec.apply_pauli(conj_pauli_matrix(p).widened(2 * n));
}

}  // namespace

DensityMatrix::DensityMatrix(uint32_t n, uint32_t n_data)
    : n_(n), n_data_(n_data == 0 ? n : n_data), vec_(2 * n) {
  if (n < 1 || n > 10) {
    throw std::invalid_argument("density matrix: need 1 <= n <= 10 qubits");
  }
  if (n_data_ > n) {
    throw std::invalid_argument("density matrix: n_data > n");
  }
}

DensityMatrix DensityMatrix::evolve(const Circuit& c, const NoiseModel& noise) {
  c.validate();
  if (c.total_qubits() > 10) {
    throw std::invalid_argument("density evolve: more than 10 total qubits");
  }
  DensityMatrix rho(c.total_qubits(), c.n_data);
  const auto plan = noise_plan(c, noise);
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.kind == GateKind::MeasureZ) continue;  // readout handled by queries
    if (g.kind == GateKind::Reset) {
      throw std::invalid_argument("density evolve: Reset is not supported");
    }
    rho.apply_gate(g);
    for (const NoiseSite& site : plan[i]) {
      std::vector<uint32_t> support{site.q0};
      if (site.arity == 2) support.push_back(site.q1);
      rho.apply_depolarizing(support, site.rate);
    }
  }
  return rho;
}

void DensityMatrix::apply_gate(const Gate& g) {
  vec_.apply_gate(shift_gate(g, n_));
  if (g.kind == GateKind::Y) {
    PauliString minus_y = PauliString::single_y(2 * n_, g.qubits[0]);
    minus_y.phase_exp = (minus_y.phase_exp + 2) & 3;  // conj(Y) = -Y
    vec_.apply_pauli(minus_y);
    return;
  }
  vec_.apply_gate(conj_gate_matrix(g));
}

void DensityMatrix::apply_pauli(const PauliString& p) {
  two_sided_pauli(vec_, n_, p);
}

void DensityMatrix::apply_depolarizing(const std::vector<uint32_t>& support,
                                       double rate) {
  if (rate == 0) return;
  if (support.size() != 1 && support.size() != 2) {
    throw std::invalid_argument("apply_depolarizing: support must be 1 or 2 qubits");
  }
  const size_t terms = support.size() == 1 ? 3 : 15;
  const std::vector<cplx> base = vec_.amplitudes();
  auto& cur = vec_.mutable_amplitudes();
  for (auto& a : cur) a *= 1.0 - rate;
  const double w = rate / static_cast<double>(terms);
  Statevector scratch(2 * n_);
  for (size_t t = 1; t <= terms; ++t) {
    PauliString p = PauliString::identity(n_);
    auto set_letter = [&p](uint64_t letter, uint32_t q) {
      if (letter == 1 || letter == 2) p.x |= 1ull << q;
      if (letter == 2 || letter == 3) p.z |= 1ull << q;
    };
    if (support.size() == 1) {
      set_letter(t, support[0]);
    } else {
      set_letter(t >> 2, support[0]);
      set_letter(t & 3, support[1]);
    }
    p.phase_exp = static_cast<uint8_t>(std::popcount(p.x & p.z) & 3);
    scratch.mutable_amplitudes() = base;
    two_sided_pauli(scratch, n_, p);
    const auto& moved = scratch.amplitudes();
    for (size_t i = 0; i < cur.size(); ++i) cur[i] += w * moved[i];
  }
}

void DensityMatrix::apply_global_depolarizing(double rate) {
  if (rate == 0) return;
  const double d = static_cast<double>(size_t{1} << n_);
  auto& cur = vec_.mutable_amplitudes();
  double tr = 0;
  for (uint64_t b = 0; b < (1ull << n_); ++b) tr += cur[(b << n_) | b].real();
  for (auto& a : cur) a *= 1.0 - rate;
  for (uint64_t b = 0; b < (1ull << n_); ++b) {
    cur[(b << n_) | b] += rate * tr / d;
  }
}

double DensityMatrix::trace() const {
  cplx t{0, 0};
  for (uint64_t b = 0; b < (1ull << n_); ++b) t += entry(b, b);
  return t.real();
}

double DensityMatrix::purity() const {
  double s = 0;
  for (const auto& a : vec_.amplitudes()) s += std::norm(a);
  return s;
}

double DensityMatrix::expectation(const PauliString& p) const {
  if (p.num_qubits != n_) {
    throw std::invalid_argument("density expectation: size mismatch");
  }
  const cplx base_phase = phase_i_pow(p.phase_exp);
  cplx acc{0, 0};
  for (uint64_t b = 0; b < (1ull << n_); ++b) {
    const int par = std::popcount(p.z & b) & 1;
    const cplx ph = par ? -base_phase : base_phase;
    acc += entry(b, b ^ p.x) * ph;
  }
  return acc.real();
}

double DensityMatrix::expectation_z_data(const PauliString& observable,
                                         bool post_select,
                                         double* keep_rate) const {
  if (observable.x != 0) {
    throw std::invalid_argument("density expectation_z_data: observable must be I/Z only");
  }
  const uint64_t data_mask = (1ull << n_data_) - 1;
  const int sign = observable.real_sign();
  double keep = 0;
  double val = 0;
  for (uint64_t b = 0; b < (1ull << n_); ++b) {
    if (post_select && (b & ~data_mask) != 0) continue;
    const double pb = entry(b, b).real();
    keep += pb;
    const int par = std::popcount(b & observable.z) & 1;
    val += (par ? -1.0 : 1.0) * pb;
  }
  if (keep_rate != nullptr) *keep_rate = keep;
  if (keep <= 1e-15) {
    throw PostselectionStarved("density expectation: post-selection starved");
  }
  return sign * val / keep;
}

}  // namespace qem
