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
#include <vector>

#include "qemlab/pauli.hpp"
#include "qemlab/rng.hpp"

namespace qem {

/// Elementary Clifford conjugations, p -> G p G^dagger, exact phases.
/// These are the building blocks for tableaux, gate-level propagation and
/// the random-Clifford sampler.
PauliString conj_h(const PauliString& p, uint32_t q);
PauliString conj_s(const PauliString& p, uint32_t q);
PauliString conj_sdg(const PauliString& p, uint32_t q);
PauliString conj_x(const PauliString& p, uint32_t q);
PauliString conj_y(const PauliString& p, uint32_t q);
PauliString conj_z(const PauliString& p, uint32_t q);
PauliString conj_cx(const PauliString& p, uint32_t control, uint32_t target);
PauliString conj_cz(const PauliString& p, uint32_t a, uint32_t b);
PauliString conj_swap(const PauliString& p, uint32_t a, uint32_t b);

/// Conjugation by controlled-P with control qubit `control`; `pauli` must be
/// Hermitian (sign +-1) and supported away from the control.
PauliString conj_cpauli(const PauliString& p, uint32_t control,
                        const PauliString& pauli);

/// Conjugation by exp(-i theta P / 2) for a Clifford angle (multiple of
/// pi/2). `axis` is the single rotation generator. Throws for non-Clifford
/// angles.
PauliString conj_rotation(const PauliString& p, const PauliString& axis,
                          double theta);

/// One gate of the sampler's sweep decomposition.
struct CliffordOp {
  enum Kind : uint8_t { H, S, Sdg, X, Z, CX, Swap };
  Kind kind;
  uint32_t a = 0;
  uint32_t b = 0;  // second operand for CX/Swap
};

PauliString conj_op(const PauliString& p, const CliffordOp& op);
CliffordOp inverse_op(const CliffordOp& op);

/// Symplectic tableau for an n-qubit Clifford U: the signed images of the
/// generators under conjugation, images_x[q] = U X_q U^dagger and
/// images_z[q] = U Z_q U^dagger.
class CliffordTableau {
 public:
  CliffordTableau() = default;
  static CliffordTableau identity(uint32_t n);

  /// Builds from explicit generator images; validates the symplectic
  /// invariants.
  static CliffordTableau from_images(uint32_t n, std::vector<PauliString> images_x,
                                     std::vector<PauliString> images_z);

  uint32_t num_qubits() const { return n_; }
  const PauliString& image_x(uint32_t q) const { return img_x_[q]; }
  const PauliString& image_z(uint32_t q) const { return img_z_[q]; }

  /// U p U^dagger for an arbitrary signed Pauli; multiplicative in p.
  PauliString conjugate(const PauliString& p) const;

  /// Tableau of (this o inner), i.e. the unitary this*inner.
  CliffordTableau compose(const CliffordTableau& inner) const;

  CliffordTableau inverse() const;

  /// Applies gate G in circuit order: tableau becomes T_G o this.
  void apply_op(const CliffordOp& op);

  /// Symplectic and Hermiticity invariants of a well-formed tableau.
  bool valid() const;

  /// Canonical byte encoding, usable as a hash/dedupe key.
  std::vector<uint8_t> key() const;

  bool operator==(const CliffordTableau&) const = default;

 private:
  uint32_t n_ = 0;
  std::vector<PauliString> img_x_;
  std::vector<PauliString> img_z_;
};

/// A uniformly sampled Clifford together with a circuit realization.
struct SampledClifford {
  CliffordTableau tableau;
  std::vector<CliffordOp> ops;  // applying ops in order realizes the tableau
};

/// Draws uniformly from the n-qubit Clifford group (mod global phase) by the
/// sweep construction: per qubit, sample a signed anticommuting generator
/// pair without rejection and reduce it to (X_q, Z_q) with elementary gates.
/// Deterministic given the rng state.
SampledClifford sample_random_clifford(uint32_t n, Rng& rng);

/// Tableau-only variant.
CliffordTableau random_clifford(uint32_t n, Rng& rng);

}  // namespace qem
