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

// Dense complex-matrix oracle for the algebraic tests. Everything here is
// built from first-principles gate definitions (explicit matrices and basis
// permutations) and stays independent of the library's bit-mask code paths.

#pragma once

#include <bit>
#include <complex>
#include <stdexcept>
#include <vector>

#include "qemlab/circuit.hpp"
#include "qemlab/pauli.hpp"

namespace qem::test {

using cplx = std::complex<double>;

struct CMat {
  size_t dim = 0;
  std::vector<cplx> a;  // row-major

  CMat() = default;
  explicit CMat(size_t d) : dim(d), a(d * d, cplx{0, 0}) {}

  cplx& at(size_t r, size_t c) { return a[r * dim + c]; }
  const cplx& at(size_t r, size_t c) const { return a[r * dim + c]; }

  static CMat identity(size_t d) {
    CMat m(d);
    for (size_t i = 0; i < d; ++i) m.at(i, i) = 1;
    return m;
  }
};

inline CMat mul(const CMat& x, const CMat& y) {
  if (x.dim != y.dim) throw std::invalid_argument("oracle mul: dim mismatch");
  CMat r(x.dim);
  for (size_t i = 0; i < x.dim; ++i) {
    for (size_t k = 0; k < x.dim; ++k) {
      const cplx v = x.at(i, k);
      if (v == cplx{0, 0}) continue;
      for (size_t j = 0; j < x.dim; ++j) {
        r.at(i, j) += v * y.at(k, j);
      }
    }
  }
  return r;
}

inline CMat dagger(const CMat& x) {
  CMat r(x.dim);
  for (size_t i = 0; i < x.dim; ++i) {
    for (size_t j = 0; j < x.dim; ++j) {
      r.at(i, j) = std::conj(x.at(j, i));
    }
  }
  return r;
}

inline CMat scaled(const CMat& x, cplx s) {
  CMat r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

inline CMat sub(const CMat& x, const CMat& y) {
  CMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

inline double frobenius(const CMat& x) {
  double s = 0;
  for (const auto& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

inline cplx i_pow(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// Full 2^n matrix of a signed Pauli string: i^k (-1)^(z.b) |b xor x><b|.
inline CMat pauli_matrix(const PauliString& p) {
  const size_t d = size_t{1} << p.num_qubits;
  CMat m(d);
  const cplx phase = i_pow(p.phase_exp);
  for (size_t b = 0; b < d; ++b) {
    const int par = std::popcount(p.z & b) & 1;
    m.at(b ^ p.x, b) = par ? -phase : phase;
  }
  return m;
}

/// Full matrix of one gate over n qubits, built by embedding the local
/// matrix (one-qubit gates) or by explicit basis permutation/phase action
/// (two-qubit and controlled gates).
inline CMat gate_matrix(const Gate& g, uint32_t n) {
  const size_t d = size_t{1} << n;
  const double inv_sqrt2 = 0.7071067811865475244;
  const cplx one{1, 0}, im{0, 1};
  switch (g.kind) {
    case GateKind::H:
    case GateKind::S:
    case GateKind::Sdg:
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz: {
      cplx m2[2][2];
      switch (g.kind) {
        case GateKind::H:
          m2[0][0] = inv_sqrt2; m2[0][1] = inv_sqrt2;
          m2[1][0] = inv_sqrt2; m2[1][1] = -inv_sqrt2;
          break;
        case GateKind::S:
          m2[0][0] = one; m2[0][1] = 0; m2[1][0] = 0; m2[1][1] = im;
          break;
        case GateKind::Sdg:
          m2[0][0] = one; m2[0][1] = 0; m2[1][0] = 0; m2[1][1] = -im;
          break;
        case GateKind::Rx: {
          const double h = g.angle / 2;
          m2[0][0] = std::cos(h); m2[0][1] = -im * std::sin(h);
          m2[1][0] = -im * std::sin(h); m2[1][1] = std::cos(h);
          break;
        }
        case GateKind::Ry: {
          const double h = g.angle / 2;
          m2[0][0] = std::cos(h); m2[0][1] = -std::sin(h);
          m2[1][0] = std::sin(h); m2[1][1] = std::cos(h);
          break;
        }
        default: {  // Rz
          const double h = g.angle / 2;
          m2[0][0] = std::exp(-im * h); m2[0][1] = 0;
          m2[1][0] = 0; m2[1][1] = std::exp(im * h);
          break;
        }
      }
      CMat m(d);
      const uint64_t bit = 1ull << g.qubits[0];
      for (size_t col = 0; col < d; ++col) {
        const size_t b = (col >> g.qubits[0]) & 1;
        m.at(col & ~bit, col) += m2[0][b];
        m.at(col | bit, col) += m2[1][b];
      }
      return m;
    }
    case GateKind::X:
      return pauli_matrix(PauliString::single_x(n, g.qubits[0]));
    case GateKind::Y:
      return pauli_matrix(PauliString::single_y(n, g.qubits[0]));
    case GateKind::Z:
      return pauli_matrix(PauliString::single_z(n, g.qubits[0]));
    case GateKind::CX: {
      CMat m(d);
      const uint64_t cb = 1ull << g.qubits[0];
      const uint64_t tb = 1ull << g.qubits[1];
      for (size_t col = 0; col < d; ++col) {
        m.at((col & cb) ? col ^ tb : col, col) = 1;
      }
      return m;
    }
    case GateKind::CZ: {
      CMat m(d);
      const uint64_t ab = 1ull << g.qubits[0];
      const uint64_t bb = 1ull << g.qubits[1];
      for (size_t col = 0; col < d; ++col) {
        m.at(col, col) = ((col & ab) && (col & bb)) ? -1 : 1;
      }
      return m;
    }
    case GateKind::Swap: {
      CMat m(d);
      const uint32_t qa = g.qubits[0], qb = g.qubits[1];
      for (size_t col = 0; col < d; ++col) {
        const uint64_t ba = (col >> qa) & 1;
        const uint64_t bb = (col >> qb) & 1;
        size_t row = col & ~((1ull << qa) | (1ull << qb));
        row |= ba << qb;
        row |= bb << qa;
        m.at(row, col) = 1;
      }
      return m;
    }
    case GateKind::CPauli: {
      CMat m(d);
      const uint64_t cb = 1ull << g.qubits[0];
      const cplx phase = i_pow(g.pauli.phase_exp);
      for (size_t col = 0; col < d; ++col) {
        if (!(col & cb)) {
          m.at(col, col) = 1;
        } else {
          const int par = std::popcount(g.pauli.z & col) & 1;
          m.at(col ^ g.pauli.x, col) = par ? -phase : phase;
        }
      }
      return m;
    }
    case GateKind::MeasureZ:
    case GateKind::Reset:
      throw std::invalid_argument("oracle gate_matrix: not unitary");
  }
  throw std::logic_error("oracle gate_matrix: bad kind");
}

/// Product of the gate matrices in circuit order (first gate rightmost).
inline CMat circuit_unitary(const Circuit& c) {
  const uint32_t n = c.total_qubits();
  CMat u = CMat::identity(size_t{1} << n);
  for (const auto& g : c.gates) {
    u = mul(gate_matrix(g, n), u);
  }
  return u;
}

inline std::vector<cplx> apply_to_zero_state(const CMat& u) {
  std::vector<cplx> out(u.dim);
  for (size_t i = 0; i < u.dim; ++i) out[i] = u.at(i, 0);
  return out;
}

inline bool approx_equal(const CMat& x, const CMat& y, double tol) {
  if (x.dim != y.dim) return false;
  return frobenius(sub(x, y)) <= tol;
}

/// Equality after removing a global phase (aligned on the largest entry).
inline bool approx_equal_up_to_phase(const CMat& x, const CMat& y, double tol) {
  if (x.dim != y.dim) return false;
  size_t best = 0;
  double mag = 0;
  for (size_t i = 0; i < x.a.size(); ++i) {
    if (std::abs(x.a[i]) > mag) {
      mag = std::abs(x.a[i]);
      best = i;
    }
  }
  if (mag < tol) return frobenius(y) <= tol;
  const cplx phase = y.a[best] / x.a[best];
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  return frobenius(sub(scaled(x, phase), y)) <= tol;
}

}  // namespace qem::test
