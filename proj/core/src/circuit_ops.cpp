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

#include "qemlab/circuit_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qemlab/rng.hpp"

namespace qem {

namespace {

constexpr double kTwoPi = 6.283185307179586476925287;

void shuffle(std::vector<uint32_t>& v, Rng& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[rng.uniform(i)]);
  }
}

const GateKind kOneQubitCliffords[] = {GateKind::H, GateKind::S, GateKind::Sdg,
                                       GateKind::X, GateKind::Y, GateKind::Z};
const GateKind kTwoQubitCliffords[] = {GateKind::CX, GateKind::CZ, GateKind::Swap};

}  // namespace

Circuit random_clifford_circuit(uint32_t n, uint32_t depth, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_clifford_circuit: n >= 1");
  if (depth < 1) throw std::invalid_argument("random_clifford_circuit: depth >= 1");
  Rng rng = Rng::derive(seed, 0x1c1f);
  Circuit c;
  c.n_data = n;
  c.metadata.label = "random_clifford_layers_v1";
  c.metadata.seed = seed;
  c.metadata.depth = depth;
  std::vector<uint32_t> order(n);
  for (uint32_t layer = 0; layer < depth; ++layer) {
    const uint32_t subset = 1 + static_cast<uint32_t>(rng.uniform(n));
    for (uint32_t q = 0; q < n; ++q) order[q] = q;
    shuffle(order, rng);
    uint32_t idx = 0;
    while (idx + 1 < subset) {
      const GateKind kind = kTwoQubitCliffords[rng.uniform(3)];
      c.gates.push_back(Gate::two(kind, order[idx], order[idx + 1]));
      idx += 2;
    }
    if (idx < subset) {
      const GateKind kind = kOneQubitCliffords[rng.uniform(6)];
      c.gates.push_back(Gate::one(kind, order[idx]));
    }
  }
  return c;
}

Gate inverse_gate(const Gate& g) {
  switch (g.kind) {
    case GateKind::S: return Gate::one(GateKind::Sdg, g.qubits[0]);
    case GateKind::Sdg: return Gate::one(GateKind::S, g.qubits[0]);
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz: {
      Gate r = g;
      r.angle = -g.angle;
      return r;
    }
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::Swap:
    case GateKind::CPauli:
      return g;  // self-inverse (CPauli payloads are Hermitian)
    case GateKind::MeasureZ:
    case GateKind::Reset:
      throw std::invalid_argument("inverse_gate: measurement has no inverse");
  }
  throw std::logic_error("inverse_gate: bad kind");
}

Circuit mirror(const Circuit& c) {
  if (c.has_measurement()) {
    throw std::invalid_argument("mirror: payload contains a measurement");
  }
  Circuit out = c;
  out.gates.reserve(2 * c.gates.size());
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    out.gates.push_back(inverse_gate(*it));
  }
  out.metadata.depth = 2 * c.metadata.depth;
  return out;
}

Circuit fold_global(const Circuit& c, double scale) {
  if (scale < 1.0) throw std::invalid_argument("fold_global: scale >= 1");
  if (c.has_measurement()) {
    throw std::invalid_argument("fold_global: payload contains a measurement");
  }
  const size_t g_count = c.gates.size();
  const uint64_t k = static_cast<uint64_t>(std::floor((scale - 1.0) / 2.0 + 1e-12));
  const double frac = (scale - (1.0 + 2.0 * static_cast<double>(k))) / 2.0;
  size_t r = static_cast<size_t>(std::llround(frac * static_cast<double>(g_count)));
  if (r > g_count) r = g_count;

  Circuit out = c;
  out.gates.clear();
  out.gates.reserve(g_count * (1 + 2 * k) + 2 * r);
  out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
  for (uint64_t fold = 0; fold < k; ++fold) {
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
      out.gates.push_back(inverse_gate(*it));
    }
    out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
  }
  if (r > 0) {
    // Fold the trailing r gates of the current sequence individually.
    std::vector<Gate> folded;
    folded.reserve(out.gates.size() + 2 * r);
    const size_t keep = out.gates.size() - r;
    folded.insert(folded.end(), out.gates.begin(), out.gates.begin() + keep);
    for (size_t i = keep; i < out.gates.size(); ++i) {
      folded.push_back(out.gates[i]);
      folded.push_back(inverse_gate(out.gates[i]));
      folded.push_back(out.gates[i]);
    }
    out.gates = std::move(folded);
  }
  return out;
}

PauliString conjugate_by_gate(const PauliString& p, const Gate& g, uint32_t n_total) {
  switch (g.kind) {
    case GateKind::H: return conj_h(p, g.qubits[0]);
    case GateKind::S: return conj_s(p, g.qubits[0]);
    case GateKind::Sdg: return conj_sdg(p, g.qubits[0]);
    case GateKind::X: return conj_x(p, g.qubits[0]);
    case GateKind::Y: return conj_y(p, g.qubits[0]);
    case GateKind::Z: return conj_z(p, g.qubits[0]);
    case GateKind::CX: return conj_cx(p, g.qubits[0], g.qubits[1]);
    case GateKind::CZ: return conj_cz(p, g.qubits[0], g.qubits[1]);
    case GateKind::Swap: return conj_swap(p, g.qubits[0], g.qubits[1]);
    case GateKind::Rx:
      return conj_rotation(p, PauliString::single_x(n_total, g.qubits[0]), g.angle);
    case GateKind::Ry:
      return conj_rotation(p, PauliString::single_y(n_total, g.qubits[0]), g.angle);
    case GateKind::Rz:
      return conj_rotation(p, PauliString::single_z(n_total, g.qubits[0]), g.angle);
    case GateKind::CPauli:
      return conj_cpauli(p, g.qubits[0], g.pauli);
    case GateKind::MeasureZ:
    case GateKind::Reset:
      throw std::invalid_argument("conjugate_by_gate: measurement is not unitary");
  }
  throw std::logic_error("conjugate_by_gate: bad kind");
}

CliffordTableau clifford_tableau_of(const Circuit& c) {
  const uint32_t n = c.total_qubits();
  // Incremental: after each gate g, every image picks up conj by g.
  std::vector<PauliString> imgs_x, imgs_z;
  imgs_x.reserve(n);
  imgs_z.reserve(n);
  for (uint32_t q = 0; q < n; ++q) {
    imgs_x.push_back(PauliString::single_x(n, q));
    imgs_z.push_back(PauliString::single_z(n, q));
  }
  for (const auto& g : c.gates) {
    for (auto& img : imgs_x) img = conjugate_by_gate(img, g, n);
    for (auto& img : imgs_z) img = conjugate_by_gate(img, g, n);
  }
  return CliffordTableau::from_images(n, std::move(imgs_x), std::move(imgs_z));
}

int ideal_z_parity(const Circuit& c) {
  if (!c.is_clifford()) {
    throw std::invalid_argument("ideal_z_parity: circuit is not Clifford");
  }
  const uint32_t n = c.total_qubits();
  PauliString obs = PauliString::identity(n);
  for (uint32_t q = 0; q < c.n_data; ++q) obs.z |= 1ull << q;
  // <0| U^dagger Z..Z U |0> via backward conjugation through the gate list.
  PauliString back = obs;
  for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) {
    if (it->is_measurement()) {
      throw std::invalid_argument("ideal_z_parity: circuit contains a measurement");
    }
    back = conjugate_by_gate(back, inverse_gate(*it), n);
  }
  if (back.x != 0) return 0;
  return back.real_sign();
}

std::vector<Gate> ops_to_gates(const std::vector<CliffordOp>& ops, uint32_t offset) {
  std::vector<Gate> out;
  out.reserve(ops.size());
  for (const auto& op : ops) {
    switch (op.kind) {
      case CliffordOp::H: out.push_back(Gate::one(GateKind::H, op.a + offset)); break;
      case CliffordOp::S: out.push_back(Gate::one(GateKind::S, op.a + offset)); break;
      case CliffordOp::Sdg: out.push_back(Gate::one(GateKind::Sdg, op.a + offset)); break;
      case CliffordOp::X: out.push_back(Gate::one(GateKind::X, op.a + offset)); break;
      case CliffordOp::Z: out.push_back(Gate::one(GateKind::Z, op.a + offset)); break;
      case CliffordOp::CX:
        out.push_back(Gate::two(GateKind::CX, op.a + offset, op.b + offset));
        break;
      case CliffordOp::Swap:
        out.push_back(Gate::two(GateKind::Swap, op.a + offset, op.b + offset));
        break;
    }
  }
  return out;
}

Circuit standin_prep(uint32_t n, uint32_t layers, uint64_t seed, int n_checkable) {
  if (n < 2) throw std::invalid_argument("standin_prep: n >= 2");
  uint32_t checkable = n_checkable < 0
                           ? (n <= 4 ? n - 1 : n / 2)
                           : static_cast<uint32_t>(n_checkable);
  if (checkable >= n) checkable = n - 1;
  Rng rng = Rng::derive(seed, 0x9e9);
  Circuit c;
  c.n_data = n;
  c.metadata.label = "standin_prep_v1_c" + std::to_string(checkable);
  c.metadata.seed = seed;
  c.metadata.depth = layers;
  // Amplitude layer: RY only on qubits whose Z check would not commute
  // through anyway; keeps Z_0..Z_{checkable-1} transparent to the circuit.
  for (uint32_t q = checkable; q < n; ++q) {
    c.gates.push_back(Gate::rotation(GateKind::Ry, q, rng.uniform_real() * kTwoPi));
  }
  std::vector<uint32_t> order(n);
  for (uint32_t layer = 0; layer < layers; ++layer) {
    for (uint32_t q = 0; q < n; ++q) order[q] = q;
    shuffle(order, rng);
    for (uint32_t k = 0; k + 1 < n; k += 2) {
      c.gates.push_back(Gate::two(GateKind::CX, order[k], order[k + 1]));
    }
    for (uint32_t q = 0; q < n; ++q) {
      c.gates.push_back(Gate::rotation(GateKind::Rz, q, rng.uniform_real() * kTwoPi));
    }
  }
  return c;
}

}  // namespace qem
