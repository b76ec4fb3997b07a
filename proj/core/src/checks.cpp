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

#include "qemlab/checks.hpp"

#include <cmath>
#include <stdexcept>

#include "qemlab/circuit_ops.hpp"

namespace qem {

std::optional<CheckPair> find_check_pair(const Circuit& payload,
                                         const PauliString& right,
                                         size_t begin, size_t end) {
  if (right.num_qubits != payload.n_data) {
    throw std::invalid_argument("find_check_pair: right must span the data qubits");
  }
  if (right.is_identity_up_to_phase()) {
    throw std::invalid_argument("find_check_pair: right must be non-identity");
  }
  if (!right.is_hermitian()) {
    throw std::invalid_argument("find_check_pair: right must be Hermitian");
  }
  const size_t stop = end == SIZE_MAX ? payload.gates.size()
                                      : std::min(end, payload.gates.size());
  const uint32_t n_total = payload.total_qubits();
  PauliString current = right.widened(n_total);
  for (size_t i = begin; i < stop; ++i) {
    const Gate& g = payload.gates[i];
    if (g.is_measurement()) {
      throw std::invalid_argument("find_check_pair: measurement inside payload region");
    }
    if (g.is_rotation()) {
      PauliString axis;
      switch (g.kind) {
        case GateKind::Rx: axis = PauliString::single_x(n_total, g.qubits[0]); break;
        case GateKind::Ry: axis = PauliString::single_y(n_total, g.qubits[0]); break;
        default: axis = PauliString::single_z(n_total, g.qubits[0]); break;
      }
      if (!commutes(current, axis)) return std::nullopt;
      continue;  // passes through unchanged
    }
    current = conjugate_by_gate(current, g, n_total);
  }
  CheckPair pair;
  pair.right = right;
  PauliString left = current;
  left.num_qubits = payload.n_data;  // images stay on the data register
  if ((left.x | left.z) & ~left.mask()) {
    throw std::logic_error("find_check_pair: image escaped the data register");
  }
  pair.left = left;
  return pair;
}

SandwichCircuit build_sandwich(const SandwichPlan& plan) {
  const Circuit& payload = plan.payload;
  payload.validate();
  if (payload.n_ancilla != 0) {
    throw std::invalid_argument("build_sandwich: payload already has ancillas");
  }
  if (payload.has_measurement()) {
    throw std::invalid_argument("build_sandwich: payload contains measurements");
  }
  const size_t region_end = plan.region_end == 0 && plan.region_begin == 0
                                ? payload.gates.size()
                                : plan.region_end;
  if (plan.region_begin > payload.gates.size() || region_end > payload.gates.size() ||
      plan.region_begin > region_end) {
    throw std::invalid_argument("build_sandwich: bad protected region");
  }
  const uint32_t m = static_cast<uint32_t>(plan.layers.size());
  const uint32_t n = payload.n_data;
  if (n + m > 24) {
    throw std::invalid_argument("build_sandwich: ancilla budget exceeded (24 qubits)");
  }
  // Re-validate every pair against the bare payload region.
  for (uint32_t j = 0; j < m; ++j) {
    const auto found =
        find_check_pair(payload, plan.layers[j].right, plan.region_begin, region_end);
    if (!found.has_value() || !(found->left == plan.layers[j].left)) {
      throw std::invalid_argument("build_sandwich: layer " + std::to_string(j) +
                                  " does not satisfy the check condition");
    }
  }

  Circuit out;
  out.n_data = n;
  out.n_ancilla = m;
  out.metadata = payload.metadata;
  out.metadata.label += m > 0 ? "_pcs" + std::to_string(m) : "";
  const auto append_range = [&out, &payload](size_t from, size_t to) {
    out.gates.insert(out.gates.end(), payload.gates.begin() + from,
                     payload.gates.begin() + to);
  };

  append_range(0, plan.region_begin);
  // Entry checks, outermost (layer m-1) first so layer 0 hugs the region.
  for (uint32_t j = m; j-- > 0;) {
    const uint32_t ancilla = n + j;
    out.gates.push_back(Gate::one(GateKind::H, ancilla));
    out.gates.push_back(Gate::cpauli(ancilla, plan.layers[j].right));
  }
  append_range(plan.region_begin, region_end);
  for (uint32_t j = 0; j < m; ++j) {
    const uint32_t ancilla = n + j;
    out.gates.push_back(Gate::cpauli(ancilla, plan.layers[j].left));
    out.gates.push_back(Gate::one(GateKind::H, ancilla));
  }
  append_range(region_end, payload.gates.size());
  for (uint32_t j = 0; j < m; ++j) {
    out.gates.push_back(Gate::one(GateKind::MeasureZ, n + j));
  }
  for (uint32_t q = 0; q < n; ++q) {
    out.gates.push_back(Gate::one(GateKind::MeasureZ, q));
  }
  out.validate();

  SandwichCircuit result;
  result.circuit = std::move(out);
  result.payload_begin = plan.region_begin + 2 * m;
  result.payload_end = result.payload_begin + (region_end - plan.region_begin);
  return result;
}

std::vector<std::string> sandwich_manifest(const SandwichPlan& plan) {
  std::vector<std::string> lines;
  lines.reserve(plan.layers.size() + 1);
  lines.push_back(std::string("scope=") +
                  (plan.scope == CheckScope::CliffordOnly ? "clifford_only"
                                                          : "full_circuit"));
  for (size_t j = 0; j < plan.layers.size(); ++j) {
    lines.push_back("layer " + std::to_string(j + 1) + ": R=" +
                    to_string(plan.layers[j].right) + ", L=" +
                    to_string(plan.layers[j].left));
  }
  return lines;
}

uint32_t max_checks(uint32_t n_qubits, CheckBasis basis) {
  if (n_qubits < 1) throw std::invalid_argument("max_checks: n >= 1");
  return basis == CheckBasis::ZBasis ? n_qubits : 2 * n_qubits;
}

double markov_logical_error(const MarkovModel& model, uint32_t m) {
  if (!(model.epsilon >= 0 && model.epsilon <= 1)) {
    throw std::invalid_argument("markov_logical_error: epsilon in [0, 1]");
  }
  if (model.t_d < 0 || model.t_u < 0 || model.t_ok < 0 ||
      model.t_d + model.t_u + model.t_ok > 1 + 1e-12) {
    throw std::invalid_argument("markov_logical_error: bad transition row");
  }
  // pi = (detected, undetected, ok)
  double detected = 0;
  double undetected = model.epsilon;
  double ok = 1 - model.epsilon;
  for (uint32_t step = 0; step < m; ++step) {
    const double nd = detected + 0.5 * undetected + model.t_d * ok;
    const double nu = 0.5 * undetected + model.t_u * ok;
    const double no = model.t_ok * ok;
    detected = nd;
    undetected = nu;
    ok = no;
  }
  const double denom = undetected + ok;
  if (denom <= 0) return 0;
  return undetected / denom;
}

}  // namespace qem
