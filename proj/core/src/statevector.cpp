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

#include "qemlab/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace qem {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

std::complex<double> phase_i_pow(int k) {
  switch (k & 3) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

}  // namespace

Statevector::Statevector(uint32_t n) : n_(n) {
  if (n < 1 || n > 24) {
    throw std::invalid_argument("statevector: need 1 <= n <= 24 qubits");
  }
  amp_.assign(size_t{1} << n, {0, 0});
  amp_[0] = {1, 0};
}

void Statevector::reset_to_zero() {
  std::fill(amp_.begin(), amp_.end(), cplx{0, 0});
  amp_[0] = {1, 0};
}

void Statevector::apply_one_qubit(uint32_t q, const cplx m[2][2]) {
  const size_t step = size_t{1} << q;
  for (size_t base = 0; base < amp_.size(); base += 2 * step) {
    for (size_t i = base; i < base + step; ++i) {
      const cplx a0 = amp_[i];
      const cplx a1 = amp_[i + step];
      amp_[i] = m[0][0] * a0 + m[0][1] * a1;
      amp_[i + step] = m[1][0] * a0 + m[1][1] * a1;
    }
  }
}

void Statevector::apply_pauli(const PauliString& p) {
  const uint64_t xm = p.x;
  const uint64_t zm = p.z;
  const cplx base_phase = phase_i_pow(p.phase_exp);
  if (xm == 0) {
    for (size_t i = 0; i < amp_.size(); ++i) {
      const int par = std::popcount(zm & i) & 1;
      amp_[i] *= par ? -base_phase : base_phase;
    }
    return;
  }
  for (size_t i = 0; i < amp_.size(); ++i) {
    const size_t j = i ^ xm;
    if (j < i) continue;
    // P|i> = phase_i |j>, P|j> = phase_j |i>
    const int par_i = std::popcount(zm & i) & 1;
    const int par_j = std::popcount(zm & j) & 1;
    const cplx pi = par_i ? -base_phase : base_phase;
    const cplx pj = par_j ? -base_phase : base_phase;
    const cplx ai = amp_[i];
    amp_[i] = pj * amp_[j];
    amp_[j] = pi * ai;
  }
}

void Statevector::apply_gate(const Gate& g) {
  const double inv_sqrt2 = 0.7071067811865475244;
  switch (g.kind) {
    case GateKind::H: {
      const cplx m[2][2] = {{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}};
      apply_one_qubit(g.qubits[0], m);
      return;
    }
    case GateKind::S: {
      const size_t bit = size_t{1} << g.qubits[0];
      for (size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) amp_[i] *= kI;
      }
      return;
    }
    case GateKind::Sdg: {
      const size_t bit = size_t{1} << g.qubits[0];
      for (size_t i = 0; i < amp_.size(); ++i) {
        if (i & bit) amp_[i] *= -kI;
      }
      return;
    }
    case GateKind::X:
      apply_pauli(PauliString::single_x(n_, g.qubits[0]));
      return;
    case GateKind::Y:
      apply_pauli(PauliString::single_y(n_, g.qubits[0]));
      return;
    case GateKind::Z:
      apply_pauli(PauliString::single_z(n_, g.qubits[0]));
      return;
    case GateKind::CX: {
      const size_t cb = size_t{1} << g.qubits[0];
      const size_t tb = size_t{1} << g.qubits[1];
      for (size_t i = 0; i < amp_.size(); ++i) {
        if ((i & cb) && !(i & tb)) std::swap(amp_[i], amp_[i | tb]);
      }
      return;
    }
    case GateKind::CZ: {
      const size_t ab = size_t{1} << g.qubits[0];
      const size_t bb = size_t{1} << g.qubits[1];
      for (size_t i = 0; i < amp_.size(); ++i) {
        if ((i & ab) && (i & bb)) amp_[i] = -amp_[i];
      }
      return;
    }
    case GateKind::Swap: {
      const size_t ab = size_t{1} << g.qubits[0];
      const size_t bb = size_t{1} << g.qubits[1];
      for (size_t i = 0; i < amp_.size(); ++i) {
        if ((i & ab) && !(i & bb)) std::swap(amp_[i], amp_[(i & ~ab) | bb]);
      }
      return;
    }
    case GateKind::Rx: {
      const double h = g.angle / 2;
      const cplx c = std::cos(h), s = -kI * std::sin(h);
      const cplx m[2][2] = {{c, s}, {s, c}};
      apply_one_qubit(g.qubits[0], m);
      return;
    }
    case GateKind::Ry: {
      const double h = g.angle / 2;
      const cplx c = std::cos(h), s = std::sin(h);
      const cplx m[2][2] = {{c, -s}, {s, c}};
      apply_one_qubit(g.qubits[0], m);
      return;
    }
    case GateKind::Rz: {
      const double h = g.angle / 2;
      const cplx e0 = std::exp(-kI * h), e1 = std::exp(kI * h);
      const size_t bit = size_t{1} << g.qubits[0];
      for (size_t i = 0; i < amp_.size(); ++i) {
        amp_[i] *= (i & bit) ? e1 : e0;
      }
      return;
    }
    case GateKind::CPauli: {
      const size_t cb = size_t{1} << g.qubits[0];
      const uint64_t xm = g.pauli.x;
      const uint64_t zm = g.pauli.z;
      const cplx base_phase = phase_i_pow(g.pauli.phase_exp);
      if (xm == 0) {
        for (size_t i = 0; i < amp_.size(); ++i) {
          if (!(i & cb)) continue;
          const int par = std::popcount(zm & i) & 1;
          amp_[i] *= par ? -base_phase : base_phase;
        }
        return;
      }
      for (size_t i = 0; i < amp_.size(); ++i) {
        if (!(i & cb)) continue;
        const size_t j = i ^ xm;
        if (j < i) continue;  // pair handled once; control bit shared
        const int par_i = std::popcount(zm & i) & 1;
        const int par_j = std::popcount(zm & j) & 1;
        const cplx pi = par_i ? -base_phase : base_phase;
        const cplx pj = par_j ? -base_phase : base_phase;
        const cplx ai = amp_[i];
        amp_[i] = pj * amp_[j];
        amp_[j] = pi * ai;
      }
      return;
    }
    case GateKind::MeasureZ:
    case GateKind::Reset:
      throw std::invalid_argument("statevector apply_gate: not a unitary gate");
  }
  throw std::logic_error("statevector apply_gate: bad kind");
}

double Statevector::probability_of_qubit_one(uint32_t q) const {
  const size_t bit = size_t{1} << q;
  double p = 0;
  for (size_t i = 0; i < amp_.size(); ++i) {
    if (i & bit) p += std::norm(amp_[i]);
  }
  return p;
}

int Statevector::measure(uint32_t q, Rng& rng) {
  const double p1 = probability_of_qubit_one(q);
  const int outcome = rng.uniform_real() < p1 ? 1 : 0;
  const size_t bit = size_t{1} << q;
  const double keep = outcome ? p1 : 1.0 - p1;
  const double scale = keep > 0 ? 1.0 / std::sqrt(keep) : 0.0;
  for (size_t i = 0; i < amp_.size(); ++i) {
    const bool one = (i & bit) != 0;
    if (one == (outcome == 1)) {
      amp_[i] *= scale;
    } else {
      amp_[i] = {0, 0};
    }
  }
  return outcome;
}

uint64_t Statevector::sample_outcome(Rng& rng) const {
  const double u = rng.uniform_real() * norm_squared();
  double acc = 0;
  for (size_t i = 0; i < amp_.size(); ++i) {
    acc += std::norm(amp_[i]);
    if (u < acc) return i;
  }
  return amp_.size() - 1;
}

void Statevector::reset_qubit(uint32_t q, Rng& rng) {
  const int outcome = measure(q, rng);
  if (outcome == 1) apply_pauli(PauliString::single_x(n_, q));
}

double Statevector::norm_squared() const {
  double s = 0;
  for (const auto& a : amp_) s += std::norm(a);
  return s;
}

double Statevector::expectation(const PauliString& p) const {
  if (p.num_qubits != n_) {
    throw std::invalid_argument("statevector expectation: size mismatch");
  }
  const cplx base_phase = phase_i_pow(p.phase_exp);
  cplx acc{0, 0};
  for (size_t i = 0; i < amp_.size(); ++i) {
    const size_t j = i ^ p.x;
    const int par = std::popcount(p.z & i) & 1;
    const cplx ph = par ? -base_phase : base_phase;
    // <psi|P|psi> = sum_i conj(a_{i xor x}) * phase_i * a_i
    acc += std::conj(amp_[j]) * ph * amp_[i];
  }
  return acc.real();
}

}  // namespace qem
