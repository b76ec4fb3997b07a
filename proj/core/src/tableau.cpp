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

#include "qemlab/tableau.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qem {

namespace {

// Strips the given qubits out of p, keeping the phase so the canonical
// factor order (ascending qubit, X before Z) can be rebuilt via multiply.
PauliString strip(const PauliString& p, uint64_t qubit_mask) {
  PauliString r = p;
  r.x &= ~qubit_mask;
  r.z &= ~qubit_mask;
  return r;
}

}  // namespace

PauliString conj_h(const PauliString& p, uint32_t q) {
  const uint64_t bit = 1ull << q;
  PauliString r = strip(p, bit);
  if (p.x & bit) r = multiply(r, PauliString::single_z(p.num_qubits, q));
  if (p.z & bit) r = multiply(r, PauliString::single_x(p.num_qubits, q));
  return r;
}

PauliString conj_s(const PauliString& p, uint32_t q) {
  const uint64_t bit = 1ull << q;
  PauliString r = strip(p, bit);
  if (p.x & bit) r = multiply(r, PauliString::single_y(p.num_qubits, q));
  if (p.z & bit) r = multiply(r, PauliString::single_z(p.num_qubits, q));
  return r;
}

PauliString conj_sdg(const PauliString& p, uint32_t q) {
  const uint64_t bit = 1ull << q;
  PauliString r = strip(p, bit);
  if (p.x & bit) {
    PauliString minus_y = PauliString::single_y(p.num_qubits, q);
    minus_y.phase_exp = (minus_y.phase_exp + 2) & 3;
    r = multiply(r, minus_y);
  }
  if (p.z & bit) r = multiply(r, PauliString::single_z(p.num_qubits, q));
  return r;
}

namespace {

PauliString conj_pauli_gate(const PauliString& p, uint32_t q, bool flip_x,
                            bool flip_z) {
  // Conjugation by a Pauli gate only flips signs of anticommuting factors.
  PauliString r = p;
  int flips = 0;
  if (flip_z && ((p.x >> q) & 1)) ++flips;  // gate Z: X_q -> -X_q
  if (flip_x && ((p.z >> q) & 1)) ++flips;  // gate X: Z_q -> -Z_q
  r.phase_exp = static_cast<uint8_t>((r.phase_exp + 2 * (flips & 1)) & 3);
  return r;
}

}  // namespace

PauliString conj_x(const PauliString& p, uint32_t q) {
  return conj_pauli_gate(p, q, true, false);
}
PauliString conj_y(const PauliString& p, uint32_t q) {
  return conj_pauli_gate(p, q, true, true);
}
PauliString conj_z(const PauliString& p, uint32_t q) {
  return conj_pauli_gate(p, q, false, true);
}

PauliString conj_cx(const PauliString& p, uint32_t control, uint32_t target) {
  const uint64_t cb = 1ull << control;
  const uint64_t tb = 1ull << target;
  const uint32_t n = p.num_qubits;
  PauliString r = strip(p, cb | tb);
  const uint32_t lo = control < target ? control : target;
  const uint32_t hi = control < target ? target : control;
  for (uint32_t q : {lo, hi}) {
    const uint64_t bit = 1ull << q;
    if (p.x & bit) {
      if (q == control) {
        PauliString img = PauliString::single_x(n, control);
        img.x |= tb;  // X_c -> X_c X_t
        r = multiply(r, img);
      } else {
        r = multiply(r, PauliString::single_x(n, target));
      }
    }
    if (p.z & bit) {
      if (q == control) {
        r = multiply(r, PauliString::single_z(n, control));
      } else {
        PauliString img = PauliString::single_z(n, target);
        img.z |= cb;  // Z_t -> Z_c Z_t
        r = multiply(r, img);
      }
    }
  }
  return r;
}

PauliString conj_cz(const PauliString& p, uint32_t a, uint32_t b) {
  const uint64_t ab = 1ull << a;
  const uint64_t bb = 1ull << b;
  const uint32_t n = p.num_qubits;
  PauliString r = strip(p, ab | bb);
  const uint32_t lo = a < b ? a : b;
  const uint32_t hi = a < b ? b : a;
  for (uint32_t q : {lo, hi}) {
    const uint64_t bit = 1ull << q;
    const uint32_t other = q == a ? b : a;
    if (p.x & bit) {
      PauliString img = PauliString::single_x(n, q);
      img.z |= 1ull << other;  // X_q -> X_q Z_other
      r = multiply(r, img);
    }
    if (p.z & bit) {
      r = multiply(r, PauliString::single_z(n, q));
    }
  }
  return r;
}

PauliString conj_swap(const PauliString& p, uint32_t a, uint32_t b) {
  PauliString r = p;
  const uint64_t abit = 1ull << a;
  const uint64_t bbit = 1ull << b;
  const bool xa = p.x & abit, xb = p.x & bbit;
  const bool za = p.z & abit, zb = p.z & bbit;
  r.x = (p.x & ~(abit | bbit)) | (xa ? bbit : 0) | (xb ? abit : 0);
  r.z = (p.z & ~(abit | bbit)) | (za ? bbit : 0) | (zb ? abit : 0);
  return r;
}

PauliString conj_cpauli(const PauliString& p, uint32_t control,
                        const PauliString& pauli) {
  const uint32_t n = p.num_qubits;
  PauliString body = pauli.widened(n);
  if (!body.is_hermitian()) {
    throw std::invalid_argument("conj_cpauli: check pauli must be Hermitian");
  }
  if ((body.x | body.z) & (1ull << control)) {
    throw std::invalid_argument("conj_cpauli: control overlaps pauli support");
  }
  const uint64_t cb = 1ull << control;
  const uint64_t involved = (body.x | body.z) | cb;
  PauliString r = strip(p, involved);
  uint64_t rest = involved;
  while (rest) {
    const uint32_t q = static_cast<uint32_t>(std::countr_zero(rest));
    rest &= rest - 1;
    const uint64_t bit = 1ull << q;
    if (p.x & bit) {
      if (q == control) {
        // X_c -> X_c (x) P, sign of P included.
        PauliString img = multiply(PauliString::single_x(n, control), body);
        r = multiply(r, img);
      } else {
        PauliString img = PauliString::single_x(n, q);
        if ((body.z >> q) & 1) img.z |= cb;  // anticommutes with P
        r = multiply(r, img);
      }
    }
    if (p.z & bit) {
      if (q == control) {
        r = multiply(r, PauliString::single_z(n, control));
      } else {
        PauliString img = PauliString::single_z(n, q);
        if ((body.x >> q) & 1) img.z |= cb;
        r = multiply(r, img);
      }
    }
  }
  return r;
}

PauliString conj_rotation(const PauliString& p, const PauliString& axis,
                          double theta) {
  constexpr double kHalfPi = 1.5707963267948966;
  double t = std::fmod(theta, 4 * kHalfPi);
  if (t < 0) t += 4 * kHalfPi;
  const double steps = t / kHalfPi;
  const long k = std::lround(steps);
  if (std::abs(steps - static_cast<double>(k)) > 1e-9) {
    throw std::domain_error("conj_rotation: angle is not a Clifford multiple of pi/2");
  }
  const int quarter = static_cast<int>(k & 3);
  if (quarter == 0 || commutes(p, axis)) return p;
  if (quarter == 2) {
    // P p P for the Pauli axis.
    return multiply(multiply(axis, p), axis);
  }
  // exp(-i pi P/4): p -> -i P p ; the inverse direction gains +i.
  PauliString r = multiply(axis, p);
  r.phase_exp = static_cast<uint8_t>((r.phase_exp + (quarter == 1 ? 3 : 1)) & 3);
  return r;
}

PauliString conj_op(const PauliString& p, const CliffordOp& op) {
  switch (op.kind) {
    case CliffordOp::H: return conj_h(p, op.a);
    case CliffordOp::S: return conj_s(p, op.a);
    case CliffordOp::Sdg: return conj_sdg(p, op.a);
    case CliffordOp::X: return conj_x(p, op.a);
    case CliffordOp::Z: return conj_z(p, op.a);
    case CliffordOp::CX: return conj_cx(p, op.a, op.b);
    case CliffordOp::Swap: return conj_swap(p, op.a, op.b);
  }
  throw std::logic_error("conj_op: bad kind");
}

CliffordOp inverse_op(const CliffordOp& op) {
  CliffordOp r = op;
  if (op.kind == CliffordOp::S) r.kind = CliffordOp::Sdg;
  else if (op.kind == CliffordOp::Sdg) r.kind = CliffordOp::S;
  return r;
}

CliffordTableau CliffordTableau::identity(uint32_t n) {
  CliffordTableau t;
  t.n_ = n;
  t.img_x_.reserve(n);
  t.img_z_.reserve(n);
  for (uint32_t q = 0; q < n; ++q) {
    t.img_x_.push_back(PauliString::single_x(n, q));
    t.img_z_.push_back(PauliString::single_z(n, q));
  }
  return t;
}

CliffordTableau CliffordTableau::from_images(uint32_t n,
                                             std::vector<PauliString> images_x,
                                             std::vector<PauliString> images_z) {
  if (images_x.size() != n || images_z.size() != n) {
    throw std::invalid_argument("tableau from_images: wrong image count");
  }
  CliffordTableau t;
  t.n_ = n;
  t.img_x_ = std::move(images_x);
  t.img_z_ = std::move(images_z);
  if (!t.valid()) {
    throw std::invalid_argument("tableau from_images: invalid symplectic data");
  }
  return t;
}

PauliString CliffordTableau::conjugate(const PauliString& p) const {
  if (p.num_qubits != n_) {
    throw std::invalid_argument("tableau conjugate: size mismatch");
  }
  PauliString r = PauliString::identity(n_);
  r.phase_exp = p.phase_exp;
  for (uint32_t q = 0; q < n_; ++q) {
    const uint64_t bit = 1ull << q;
    if (p.x & bit) r = multiply(r, img_x_[q]);
    if (p.z & bit) r = multiply(r, img_z_[q]);
  }
  return r;
}

CliffordTableau CliffordTableau::compose(const CliffordTableau& inner) const {
  if (inner.n_ != n_) {
    throw std::invalid_argument("tableau compose: size mismatch");
  }
  CliffordTableau t;
  t.n_ = n_;
  t.img_x_.reserve(n_);
  t.img_z_.reserve(n_);
  for (uint32_t q = 0; q < n_; ++q) {
    t.img_x_.push_back(conjugate(inner.img_x_[q]));
    t.img_z_.push_back(conjugate(inner.img_z_[q]));
  }
  return t;
}

CliffordTableau CliffordTableau::inverse() const {
  // Invert the 2n x 2n symplectic bit matrix by Gaussian elimination, then
  // fix signs by conjugating each candidate pre-image forward.
  const uint32_t n = n_;
  const uint32_t dim = 2 * n;
  std::vector<uint64_t> rows(dim), aug(dim);
  // Row r of the matrix: component r of each image vector, columns are the
  // generators (X_0..X_{n-1}, Z_0..Z_{n-1}).
  for (uint32_t c = 0; c < n; ++c) {
    const PauliString& ix = img_x_[c];
    const PauliString& iz = img_z_[c];
    for (uint32_t r = 0; r < n; ++r) {
      rows[r] |= ((ix.x >> r) & 1) << c;
      rows[r] |= ((iz.x >> r) & 1) << (n + c);
      rows[n + r] |= ((ix.z >> r) & 1) << c;
      rows[n + r] |= ((iz.z >> r) & 1) << (n + c);
    }
  }
  for (uint32_t r = 0; r < dim; ++r) aug[r] = 1ull << r;
  // [M | I] -> [I | M^-1]
  for (uint32_t col = 0; col < dim; ++col) {
    uint32_t pivot = col;
    while (pivot < dim && !((rows[pivot] >> col) & 1)) ++pivot;
    if (pivot == dim) throw std::logic_error("tableau inverse: singular matrix");
    std::swap(rows[col], rows[pivot]);
    std::swap(aug[col], aug[pivot]);
    for (uint32_t r = 0; r < dim; ++r) {
      if (r != col && ((rows[r] >> col) & 1)) {
        rows[r] ^= rows[col];
        aug[r] ^= aug[col];
      }
    }
  }
  // Column c of M^-1 is the pre-image of generator c.
  CliffordTableau inv;
  inv.n_ = n;
  inv.img_x_.resize(n);
  inv.img_z_.resize(n);
  for (uint32_t c = 0; c < dim; ++c) {
    PauliString pre = PauliString::identity(n);
    for (uint32_t r = 0; r < dim; ++r) {
      if ((aug[r] >> c) & 1) {
        if (r < n) pre.x |= 1ull << r;
        else pre.z |= 1ull << (r - n);
      }
    }
    pre.phase_exp = static_cast<uint8_t>(std::popcount(pre.x & pre.z) & 3);
    // Fix the sign so that U pre U^dagger equals the generator exactly.
    PauliString fwd = conjugate(pre);
    if (!fwd.is_hermitian()) throw std::logic_error("tableau inverse: phase drift");
    if (fwd.real_sign() < 0) pre.phase_exp = (pre.phase_exp + 2) & 3;
    if (c < n) inv.img_x_[c] = pre;
    else inv.img_z_[c - n] = pre;
  }
  return inv;
}

void CliffordTableau::apply_op(const CliffordOp& op) {
  for (auto& img : img_x_) img = conj_op(img, op);
  for (auto& img : img_z_) img = conj_op(img, op);
}

bool CliffordTableau::valid() const {
  for (uint32_t i = 0; i < n_; ++i) {
    if (img_x_[i].num_qubits != n_ || img_z_[i].num_qubits != n_) return false;
    if (!img_x_[i].is_hermitian() || !img_z_[i].is_hermitian()) return false;
    if (img_x_[i].is_identity_up_to_phase()) return false;
    if (img_z_[i].is_identity_up_to_phase()) return false;
    if (commutes(img_x_[i], img_z_[i])) return false;
    for (uint32_t j = i + 1; j < n_; ++j) {
      if (!commutes(img_x_[i], img_x_[j])) return false;
      if (!commutes(img_z_[i], img_z_[j])) return false;
      if (!commutes(img_x_[i], img_z_[j])) return false;
      if (!commutes(img_z_[i], img_x_[j])) return false;
    }
  }
  return true;
}

std::vector<uint8_t> CliffordTableau::key() const {
  std::vector<uint8_t> out;
  out.reserve(n_ * 18);
  auto put = [&out](const PauliString& p) {
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<uint8_t>(p.x >> (8 * k)));
    for (int k = 0; k < 8; ++k) out.push_back(static_cast<uint8_t>(p.z >> (8 * k)));
    out.push_back(p.phase_exp);
  };
  for (uint32_t q = 0; q < n_; ++q) {
    put(img_x_[q]);
    put(img_z_[q]);
  }
  return out;
}

namespace {

struct SweepState {
  PauliString p;   // to become X_i
  PauliString pp;  // to become Z_i
  std::vector<CliffordOp>* rec;

  void emit(CliffordOp op) {
    p = conj_op(p, op);
    pp = conj_op(pp, op);
    rec->push_back(op);
  }
};

// Clears Z components of the chosen string via S/H, then reduces the X
// support to a single qubit with a CX tree. `keep_first` pins the survivor
// to the lowest support qubit (used for the second string so Z_i survives).
void reduce_to_single_x(SweepState& st, bool second, uint32_t lo_qubit) {
  PauliString& target = second ? st.pp : st.p;
  for (uint32_t q = lo_qubit; q < target.num_qubits; ++q) {
    const uint64_t bit = 1ull << q;
    if (target.z & bit) {
      st.emit(CliffordOp{(target.x & bit) ? CliffordOp::Sdg : CliffordOp::H,
                         q, 0});
    }
  }
  std::vector<uint32_t> support;
  for (uint32_t q = lo_qubit; q < target.num_qubits; ++q) {
    if ((target.x >> q) & 1) support.push_back(q);
  }
  while (support.size() > 1) {
    std::vector<uint32_t> next;
    for (size_t k = 0; k + 1 < support.size(); k += 2) {
      st.emit(CliffordOp{CliffordOp::CX, support[k], support[k + 1]});
      next.push_back(support[k]);
    }
    if (support.size() & 1) next.push_back(support.back());
    support = next;
  }
  if (!second && support.front() != lo_qubit) {
    st.emit(CliffordOp{CliffordOp::Swap, lo_qubit, support.front()});
  }
}

}  // namespace

SampledClifford sample_random_clifford(uint32_t n, Rng& rng) {
  if (n < 1 || n > 24) {
    throw std::invalid_argument("sample_random_clifford: need 1 <= n <= 24");
  }
  std::vector<CliffordOp> rec;
  for (uint32_t i = 0; i < n; ++i) {
    const uint32_t m = n - i;
    // Signed non-identity Pauli on qubits [i, n).
    const uint64_t r = rng.uniform((1ull << (2 * m)) - 1) + 1;
    PauliString p = PauliString::identity(n);
    p.x = (r & ((1ull << m) - 1)) << i;
    p.z = (r >> m) << i;
    p.phase_exp = static_cast<uint8_t>((std::popcount(p.x & p.z) + 2 * rng.bit()) & 3);

    // Anticommuting partner, sampled without rejection: free bits everywhere
    // except a pivot qubit, whose letter is chosen among the two options that
    // fix the symplectic parity.
    const uint32_t pivot = static_cast<uint32_t>(std::countr_zero(p.x | p.z));
    PauliString q = PauliString::identity(n);
    q.x = rng.bits(m) << i;
    q.z = rng.bits(m) << i;
    const uint64_t pbit = 1ull << pivot;
    q.x &= ~pbit;
    q.z &= ~pbit;
    const int parity_rest =
        (std::popcount(p.x & q.z) ^ std::popcount(p.z & q.x)) & 1;
    const bool need_local_anticommute = parity_rest == 0;
    const bool px = p.x & pbit, pz = p.z & pbit;
    // Local letter options (x, z) relative to the pivot letter of p.
    uint8_t opts[2][2];
    if (px && !pz) {        // X: anti {Z, Y}, comm {I, X}
      if (need_local_anticommute) { opts[0][0] = 0; opts[0][1] = 1; opts[1][0] = 1; opts[1][1] = 1; }
      else { opts[0][0] = 0; opts[0][1] = 0; opts[1][0] = 1; opts[1][1] = 0; }
    } else if (!px && pz) { // Z: anti {X, Y}, comm {I, Z}
      if (need_local_anticommute) { opts[0][0] = 1; opts[0][1] = 0; opts[1][0] = 1; opts[1][1] = 1; }
      else { opts[0][0] = 0; opts[0][1] = 0; opts[1][0] = 0; opts[1][1] = 1; }
    } else {                // Y: anti {X, Z}, comm {I, Y}
      if (need_local_anticommute) { opts[0][0] = 1; opts[0][1] = 0; opts[1][0] = 0; opts[1][1] = 1; }
      else { opts[0][0] = 0; opts[0][1] = 0; opts[1][0] = 1; opts[1][1] = 1; }
    }
    const int pick = rng.bit() ? 1 : 0;
    if (opts[pick][0]) q.x |= pbit;
    if (opts[pick][1]) q.z |= pbit;
    q.phase_exp = static_cast<uint8_t>((std::popcount(q.x & q.z) + 2 * rng.bit()) & 3);

    SweepState st{p, q, &rec};
    reduce_to_single_x(st, false, i);
    // st.p == +-X_i; st.pp anticommutes with it.
    const bool pp_is_z_i = st.pp.x == 0 && st.pp.z == (1ull << i);
    if (!pp_is_z_i) {
      st.emit(CliffordOp{CliffordOp::H, i, 0});
      reduce_to_single_x(st, true, i);
      st.emit(CliffordOp{CliffordOp::H, i, 0});
    }
    if (st.p.real_sign() < 0) st.emit(CliffordOp{CliffordOp::Z, i, 0});
    if (st.pp.real_sign() < 0) st.emit(CliffordOp{CliffordOp::X, i, 0});
    if (!(st.p == PauliString::single_x(n, i)) ||
        !(st.pp == PauliString::single_z(n, i))) {
      throw std::logic_error("sample_random_clifford: sweep failed");
    }
  }
  // rec maps the sampled pairs onto the trivial frame; the sample itself is
  // its inverse, realized as the reversed inverse gate list.
  SampledClifford out;
  out.ops.reserve(rec.size());
  for (auto it = rec.rbegin(); it != rec.rend(); ++it) {
    out.ops.push_back(inverse_op(*it));
  }
  CliffordTableau t = CliffordTableau::identity(n);
  for (const auto& op : out.ops) t.apply_op(op);
  out.tableau = std::move(t);
  return out;
}

CliffordTableau random_clifford(uint32_t n, Rng& rng) {
  return sample_random_clifford(n, rng).tableau;
}

}  // namespace qem
