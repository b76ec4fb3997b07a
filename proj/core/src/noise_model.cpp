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

#include "qemlab/noise_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "qemlab/rng.hpp"

namespace qem {

using ordered_json = nlohmann::ordered_json;

bool NoiseModel::is_noiseless() const {
  if (p1 != 0 || p2 != 0) return false;
  if (gaussian.enabled) return false;
  for (const auto& [q, rates] : per_qubit) {
    if (rates.first != 0 || rates.second != 0) return false;
  }
  for (const auto& [e, r] : per_edge) {
    if (r != 0) return false;
  }
  return true;
}

double NoiseModel::rate1(uint32_t q) const {
  const auto it = per_qubit.find(q);
  return it == per_qubit.end() ? p1 : it->second.first;
}

double NoiseModel::rate2(uint32_t a, uint32_t b) const {
  const auto key = std::minmax(a, b);
  const auto it = per_edge.find({key.first, key.second});
  if (it != per_edge.end()) return it->second;
  const auto qa = per_qubit.find(a);
  const auto qb = per_qubit.find(b);
  if (qa == per_qubit.end() && qb == per_qubit.end()) return p2;
  const double ra = qa == per_qubit.end() ? p2 : qa->second.second;
  const double rb = qb == per_qubit.end() ? p2 : qb->second.second;
  return 0.5 * (ra + rb);
}

NoiseModel NoiseModel::realized(uint32_t n_qubits) const {
  if (!gaussian.enabled) return *this;
  NoiseModel out = *this;
  out.gaussian.enabled = false;
  auto clamp_rate = [](double v) { return std::clamp(v, 0.0, 0.999999999); };
  // Rates are keyed by qubit/edge, not drawn sequentially, so realizations
  // over different register widths agree on their common entries.
  for (uint32_t q = 0; q < n_qubits; ++q) {
    Rng rng = Rng::derive(gaussian.seed, 0x51000000ull + q);
    out.per_qubit[q] = {clamp_rate(rng.normal(gaussian.mean1, gaussian.sd1)),
                        gaussian.mean2};
  }
  for (uint32_t a = 0; a < n_qubits; ++a) {
    for (uint32_t b = a + 1; b < n_qubits; ++b) {
      Rng rng = Rng::derive(gaussian.seed,
                            0x52000000ull + (static_cast<uint64_t>(a) << 16) + b);
      out.per_edge[{a, b}] = clamp_rate(rng.normal(gaussian.mean2, gaussian.sd2));
    }
  }
  out.validate();
  return out;
}

void NoiseModel::validate() const {
  auto check = [](double v, const char* what) {
    if (!(v >= 0.0 && v < 1.0)) {
      throw std::invalid_argument(std::string("noise model: ") + what +
                                  " must be in [0, 1)");
    }
  };
  check(p1, "p1");
  check(p2, "p2");
  for (const auto& [q, rates] : per_qubit) {
    check(rates.first, "per-qubit p1");
    check(rates.second, "per-qubit p2");
  }
  for (const auto& [e, r] : per_edge) {
    check(r, "per-edge p2");
    if (e.first >= e.second) {
      throw std::invalid_argument("noise model: edge must be sorted (a < b)");
    }
  }
}

std::string NoiseModel::to_json_text() const {
  ordered_json j;
  j["p1"] = p1;
  j["p2"] = p2;
  ordered_json pq = ordered_json::array();
  for (const auto& [q, rates] : per_qubit) {
    pq.push_back({{"qubit", q}, {"p1", rates.first}, {"p2", rates.second}});
  }
  j["per_qubit"] = pq;
  ordered_json pe = ordered_json::array();
  for (const auto& [e, r] : per_edge) {
    pe.push_back({{"qubits", {e.first, e.second}}, {"p2", r}});
  }
  j["per_edge"] = pe;
  j["noisy_checks"] = noisy_checks;
  if (gaussian.enabled) {
    j["gaussian"] = {{"mean1", gaussian.mean1}, {"sd1", gaussian.sd1},
                     {"mean2", gaussian.mean2}, {"sd2", gaussian.sd2},
                     {"seed", gaussian.seed}};
  }
  return j.dump(2) + "\n";
}

NoiseModel NoiseModel::from_json_text(const std::string& text) {
  const auto j = ordered_json::parse(text);
  NoiseModel m;
  m.p1 = j.value("p1", 0.0);
  m.p2 = j.value("p2", 0.0);
  if (j.contains("per_qubit")) {
    for (const auto& e : j.at("per_qubit")) {
      const uint32_t q = e.at("qubit").get<uint32_t>();
      m.per_qubit[q] = {e.value("p1", m.p1), e.value("p2", m.p2)};
    }
  }
  if (j.contains("per_edge")) {
    for (const auto& e : j.at("per_edge")) {
      const auto qs = e.at("qubits");
      uint32_t a = qs.at(0).get<uint32_t>();
      uint32_t b = qs.at(1).get<uint32_t>();
      if (a > b) std::swap(a, b);
      m.per_edge[{a, b}] = e.at("p2").get<double>();
    }
  }
  m.noisy_checks = j.value("noisy_checks", true);
  if (j.contains("gaussian")) {
    const auto& g = j.at("gaussian");
    m.gaussian.enabled = true;
    m.gaussian.mean1 = g.at("mean1").get<double>();
    m.gaussian.sd1 = g.at("sd1").get<double>();
    m.gaussian.mean2 = g.at("mean2").get<double>();
    m.gaussian.sd2 = g.at("sd2").get<double>();
    m.gaussian.seed = g.at("seed").get<uint64_t>();
  }
  m.validate();
  return m;
}

void NoiseModel::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  out << to_json_text();
}

NoiseModel NoiseModel::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

}  // namespace qem
