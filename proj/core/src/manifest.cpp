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

#include "qemlab/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qem {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json noise_to_json(const NoiseModel& m) {
  return ordered_json::parse(m.to_json_text());
}

NoiseModel noise_from_manifest(const ordered_json& j, const std::string& base_dir) {
  if (j.contains("noise_file")) {
    std::filesystem::path p = j.at("noise_file").get<std::string>();
    if (p.is_relative() && !base_dir.empty()) {
      p = std::filesystem::path(base_dir) / p;
    }
    return NoiseModel::load(p.string());
  }
  if (j.contains("noise")) {
    return NoiseModel::from_json_text(j.at("noise").dump());
  }
  return NoiseModel{};
}

std::vector<FitKind> fit_kinds_from_json(const ordered_json& arr) {
  std::vector<FitKind> out;
  for (const auto& v : arr) out.push_back(fit_kind_from_name(v.get<std::string>()));
  return out;
}

ordered_json fit_kinds_to_json(const std::vector<FitKind>& kinds) {
  ordered_json arr = ordered_json::array();
  for (const auto k : kinds) arr.push_back(fit_kind_name(k));
  return arr;
}

void expect_experiment(const ordered_json& j, const std::string& kind) {
  const std::string tag = j.value("experiment", "");
  if (tag != kind) {
    throw std::invalid_argument("manifest: expected experiment '" + kind +
                                "' but found '" + tag + "'");
  }
}

}  // namespace

std::string to_json_text(const HeatmapManifest& m) {
  ordered_json j;
  j["experiment"] = "heatmap";
  j["seed"] = m.seed;
  j["threads"] = m.threads;
  j["qubits"] = m.qubits;
  j["depths"] = m.depths;
  j["circuits_per_cell"] = m.circuits_per_cell;
  j["shots"] = m.shots;
  j["retry_cap"] = m.retry_cap;
  j["scale_sets"] = m.scale_sets;
  j["zne_models"] = fit_kinds_to_json(m.zne_models);
  j["pce_model"] = fit_kind_name(m.pce_model);
  j["noise"] = noise_to_json(m.noise);
  j["out_dir"] = m.out_dir;
  return j.dump(2) + "\n";
}

HeatmapManifest heatmap_manifest_from_json(const std::string& text,
                                           const std::string& base_dir) {
  const auto j = ordered_json::parse(text);
  expect_experiment(j, "heatmap");
  HeatmapManifest m;
  m.seed = j.value("seed", m.seed);
  m.threads = j.value("threads", m.threads);
  if (j.contains("qubits")) m.qubits = j.at("qubits").get<std::vector<uint32_t>>();
  if (j.contains("depths")) m.depths = j.at("depths").get<std::vector<uint32_t>>();
  m.circuits_per_cell = j.value("circuits_per_cell", m.circuits_per_cell);
  m.shots = j.value("shots", m.shots);
  m.retry_cap = j.value("retry_cap", m.retry_cap);
  if (j.contains("scale_sets")) {
    m.scale_sets = j.at("scale_sets").get<std::vector<std::vector<double>>>();
  }
  if (j.contains("zne_models")) m.zne_models = fit_kinds_from_json(j.at("zne_models"));
  if (j.contains("pce_model")) {
    m.pce_model = fit_kind_from_name(j.at("pce_model").get<std::string>());
  }
  if (j.contains("noise") || j.contains("noise_file")) {
    m.noise = noise_from_manifest(j, base_dir);
  }
  m.out_dir = j.value("out_dir", m.out_dir);
  return m;
}

std::string to_json_text(const MarkovManifest& m) {
  ordered_json j;
  j["experiment"] = "markov-check";
  j["seed"] = m.seed;
  j["threads"] = m.threads;
  j["n"] = m.n;
  j["epsilon"] = m.epsilon;
  j["max_layers"] = m.max_layers;
  j["shots"] = m.shots;
  j["out_dir"] = m.out_dir;
  return j.dump(2) + "\n";
}

MarkovManifest markov_manifest_from_json(const std::string& text,
                                         const std::string& base_dir) {
  (void)base_dir;
  const auto j = ordered_json::parse(text);
  expect_experiment(j, "markov-check");
  MarkovManifest m;
  m.seed = j.value("seed", m.seed);
  m.threads = j.value("threads", m.threads);
  m.n = j.value("n", m.n);
  m.epsilon = j.value("epsilon", m.epsilon);
  m.max_layers = j.value("max_layers", m.max_layers);
  m.shots = j.value("shots", m.shots);
  m.out_dir = j.value("out_dir", m.out_dir);
  return m;
}

std::string to_json_text(const ShadowCompareManifest& m) {
  ordered_json j;
  j["experiment"] = "shadow-compare";
  j["seed"] = m.seed;
  j["threads"] = m.threads;
  j["n"] = m.n;
  j["prep_layers"] = m.prep_layers;
  j["prep_seed"] = m.prep_seed;
  j["prep_checkable"] = m.prep_checkable;
  j["estimator"] = {{"n_groups", m.estimator.n_groups},
                    {"shadow_circuits", m.estimator.shadow_circuits},
                    {"shots_per_circuit", m.estimator.shots_per_circuit},
                    {"subset_sizes", m.estimator.subset_sizes}};
  j["checks_used"] = m.checks_used;
  j["implemented_layers"] = m.implemented_layers;
  j["prepcheck_layers"] = m.prepcheck_layers;
  j["model"] = fit_kind_name(m.model);
  j["rs_rounds"] = m.rs_rounds;
  j["extra_observables"] = m.extra_observables;
  j["dump_samples"] = m.dump_samples;
  j["noise"] = noise_to_json(m.noise);
  j["out_dir"] = m.out_dir;
  return j.dump(2) + "\n";
}

ShadowCompareManifest shadow_compare_manifest_from_json(const std::string& text,
                                                        const std::string& base_dir) {
  const auto j = ordered_json::parse(text);
  expect_experiment(j, "shadow-compare");
  ShadowCompareManifest m;
  m.seed = j.value("seed", m.seed);
  m.threads = j.value("threads", m.threads);
  m.n = j.value("n", m.n);
  m.prep_layers = j.value("prep_layers", m.prep_layers);
  m.prep_seed = j.value("prep_seed", m.prep_seed);
  m.prep_checkable = j.value("prep_checkable", m.prep_checkable);
  if (j.contains("estimator")) {
    const auto& e = j.at("estimator");
    m.estimator.n_groups = e.value("n_groups", m.estimator.n_groups);
    m.estimator.shadow_circuits = e.value("shadow_circuits", m.estimator.shadow_circuits);
    m.estimator.shots_per_circuit =
        e.value("shots_per_circuit", m.estimator.shots_per_circuit);
    if (e.contains("subset_sizes")) {
      m.estimator.subset_sizes = e.at("subset_sizes").get<std::vector<uint32_t>>();
    }
  }
  m.checks_used = j.value("checks_used", m.checks_used);
  if (j.contains("implemented_layers")) {
    m.implemented_layers = j.at("implemented_layers").get<std::vector<uint32_t>>();
  }
  if (j.contains("prepcheck_layers")) {
    m.prepcheck_layers = j.at("prepcheck_layers").get<std::vector<uint32_t>>();
  }
  if (j.contains("model")) m.model = fit_kind_from_name(j.at("model").get<std::string>());
  m.rs_rounds = j.value("rs_rounds", m.rs_rounds);
  if (j.contains("extra_observables")) {
    m.extra_observables = j.at("extra_observables").get<std::vector<std::string>>();
  }
  m.dump_samples = j.value("dump_samples", m.dump_samples);
  if (j.contains("noise") || j.contains("noise_file")) {
    m.noise = noise_from_manifest(j, base_dir);
  }
  m.out_dir = j.value("out_dir", m.out_dir);
  return m;
}

std::string manifest_kind(const std::string& path) {
  const auto j = ordered_json::parse(read_text_file(path));
  return j.value("experiment", "");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for write: " + path);
  out << text;
}

}  // namespace qem
