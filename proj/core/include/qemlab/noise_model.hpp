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
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace qem {

/// Stochastic Pauli (depolarizing) rates per gate arity, with optional
/// per-qubit / per-edge overrides and a Gaussian inhomogeneity spec that is
/// realized once per experiment.
///
/// Convention: after a gate of arity w fires with its rate p, a uniformly
/// random non-identity Pauli on the gate's support is applied (3 choices for
/// one qubit, 15 for two).
struct NoiseModel {
  double p1 = 0;
  double p2 = 0;
  std::map<uint32_t, std::pair<double, double>> per_qubit;   // q -> (p1, p2)
  std::map<std::pair<uint32_t, uint32_t>, double> per_edge;  // sorted pair -> p2
  bool noisy_checks = true;

  struct Gaussian {
    bool enabled = false;
    double mean1 = 0, sd1 = 0;
    double mean2 = 0, sd2 = 0;
    uint64_t seed = 0;
  } gaussian;

  bool is_noiseless() const;

  double rate1(uint32_t q) const;
  double rate2(uint32_t a, uint32_t b) const;

  /// Draws the Gaussian per-qubit p1 and per-edge p2 tables once (clamped to
  /// [0, 1)) over `n_qubits` fully connected qubits; the result has the
  /// gaussian spec disabled and the tables filled. No-op when not enabled.
  NoiseModel realized(uint32_t n_qubits) const;

  void validate() const;

  std::string to_json_text() const;
  static NoiseModel from_json_text(const std::string& text);
  void save(const std::string& path) const;
  static NoiseModel load(const std::string& path);
};

}  // namespace qem
