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

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qemlab/circuit_ops.hpp"
#include "qemlab/experiments.hpp"
#include "qemlab/frame_sampler.hpp"
#include "qemlab/manifest.hpp"
#include "qemlab/pipelines.hpp"

namespace {

using namespace qem;

std::string manifest_dir(const std::string& path) {
  return std::filesystem::path(path).parent_path().string();
}

struct CommonFlags {
  std::string manifest_path;
  std::optional<uint64_t> seed;
  std::optional<uint64_t> shots;
  std::optional<int> threads;
  std::string out_dir;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--manifest", flags.manifest_path, "Experiment manifest (JSON)");
  cmd->add_option("--seed", flags.seed, "Master seed override");
  cmd->add_option("--shots", flags.shots, "Shot budget override");
  cmd->add_option("--threads", flags.threads, "Worker threads (0 = hardware)");
  cmd->add_option("--out-dir", flags.out_dir, "Output directory");
}

NoiseModel load_noise_flag(const std::string& path) {
  return NoiseModel::load(path);
}

int cmd_heatmap(const CommonFlags& flags, bool full_grid) {
  HeatmapManifest manifest;
  if (!flags.manifest_path.empty()) {
    manifest = heatmap_manifest_from_json(read_text_file(flags.manifest_path),
                                          manifest_dir(flags.manifest_path));
  }
  if (full_grid) manifest.apply_full_grid();
  if (flags.seed) manifest.seed = *flags.seed;
  if (flags.shots) manifest.shots = *flags.shots;
  if (flags.threads) manifest.threads = *flags.threads;
  if (!flags.out_dir.empty()) manifest.out_dir = flags.out_dir;
  const HeatmapResult result = run_heatmap(manifest);
  write_heatmap_outputs(manifest, result);
  for (const auto& cell : result.cells) {
    std::cout << "n=" << cell.n << " depth=" << cell.depth
              << " pce_err=" << csv_double(cell.pce_err)
              << " best_zne_err=" << csv_double(cell.best_zne_err) << " ("
              << cell.best_zne_label << ")\n";
  }
  std::cout << "wrote " << manifest.out_dir << "/heatmap.csv\n";
  return 0;
}

int cmd_markov(const CommonFlags& flags) {
  MarkovManifest manifest;
  if (!flags.manifest_path.empty()) {
    manifest = markov_manifest_from_json(read_text_file(flags.manifest_path),
                                         manifest_dir(flags.manifest_path));
  }
  if (flags.seed) manifest.seed = *flags.seed;
  if (flags.shots) manifest.shots = *flags.shots;
  if (flags.threads) manifest.threads = *flags.threads;
  if (!flags.out_dir.empty()) manifest.out_dir = flags.out_dir;
  const MarkovResult result = run_markov_check(manifest);
  write_markov_outputs(manifest, result);
  for (const auto& row : result.rows) {
    std::cout << "m=" << row.m << " predicted=" << csv_double(row.predicted)
              << " empirical=" << csv_double(row.empirical)
              << " kept=" << row.kept_shots << "/" << row.total_shots << "\n";
  }
  std::cout << "wrote " << manifest.out_dir << "/markov.csv\n";
  return 0;
}

int cmd_shadow_compare(const CommonFlags& flags, bool dump_samples) {
  ShadowCompareManifest manifest;
  if (!flags.manifest_path.empty()) {
    manifest = shadow_compare_manifest_from_json(read_text_file(flags.manifest_path),
                                                 manifest_dir(flags.manifest_path));
  }
  if (flags.seed) manifest.seed = *flags.seed;
  if (flags.shots) {
    manifest.estimator.shots_per_circuit = static_cast<uint32_t>(*flags.shots);
  }
  if (flags.threads) manifest.threads = *flags.threads;
  if (!flags.out_dir.empty()) manifest.out_dir = flags.out_dir;
  if (dump_samples) manifest.dump_samples = true;
  const ShadowCompareResult result = run_shadow_compare(manifest);
  write_shadow_compare_outputs(manifest, result);
  const uint32_t last = manifest.estimator.subset_sizes.back();
  for (const auto& s : result.summary) {
    if (s.subset != last) continue;
    std::cout << "N=" << s.subset << " " << s.method
              << " mean|err|=" << csv_double(s.mean_abs_error) << "\n";
  }
  std::cout << "wrote " << manifest.out_dir << "/estimates.csv\n";
  return 0;
}

int cmd_pce(const std::string& circuit_path, const std::string& noise_path,
            uint32_t checks, const std::string& model, uint64_t shots,
            uint64_t seed, int threads, const std::string& out_dir) {
  const Circuit payload = load_circuit(circuit_path);
  NoiseModel noise;
  if (!noise_path.empty()) noise = load_noise_flag(noise_path);
  RunOptions options;
  options.threads = threads;
  const auto result = pce_pipeline(payload, noise, checks,
                                   fit_kind_from_name(model), shots, seed, options);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  std::string fit_csv = fit_csv_header() + "\n" + fit_csv_row(result.fit) + "\n";
  write_text_file(out_dir + "/fit.csv", fit_csv);
  std::string points = "abscissa,value,std_error,kept_shots,total_shots\n";
  for (size_t i = 0; i < result.per_layer.size(); ++i) {
    points += std::to_string(i + 1) + "," + csv_double(result.per_layer[i].value) +
              "," + csv_double(result.per_layer[i].std_error) + "," +
              std::to_string(result.per_layer[i].kept_shots) + "," +
              std::to_string(result.per_layer[i].total_shots) + "\n";
  }
  write_text_file(out_dir + "/points.csv", points);
  std::cout << "extrapolated=" << csv_double(result.fit.extrapolated) << " (target "
            << csv_double(result.fit.target) << ")\nwrote " << out_dir
            << "/fit.csv\n";
  return 0;
}

int cmd_zne(const std::string& circuit_path, const std::string& noise_path,
            std::vector<double> scales, const std::string& model, uint64_t shots,
            uint64_t seed, int threads, const std::string& out_dir) {
  const Circuit payload = load_circuit(circuit_path);
  NoiseModel noise;
  if (!noise_path.empty()) noise = load_noise_flag(noise_path);
  RunOptions options;
  options.threads = threads;
  const auto result = zne_pipeline(payload, noise, scales,
                                   fit_kind_from_name(model), shots, seed, options);
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  write_text_file(out_dir + "/fit.csv",
                  fit_csv_header() + "\n" + fit_csv_row(result.fit) + "\n");
  std::string points = "abscissa,value,std_error,kept_shots,total_shots\n";
  for (size_t i = 0; i < result.per_scale.size(); ++i) {
    points += csv_double(scales[i]) + "," + csv_double(result.per_scale[i].value) +
              "," + csv_double(result.per_scale[i].std_error) + "," +
              std::to_string(result.per_scale[i].kept_shots) + "," +
              std::to_string(result.per_scale[i].total_shots) + "\n";
  }
  write_text_file(out_dir + "/points.csv", points);
  std::cout << "extrapolated=" << csv_double(result.fit.extrapolated) << "\nwrote "
            << out_dir << "/fit.csv\n";
  return 0;
}

int cmd_gen_circuit(const std::string& kind, uint32_t qubits, uint32_t depth,
                    uint64_t seed, bool do_mirror, double fold_scale,
                    const std::string& out_path) {
  Circuit c;
  if (kind == "clifford") {
    c = random_clifford_circuit(qubits, depth, seed);
  } else if (kind == "prep") {
    c = standin_prep(qubits, depth, seed);
  } else {
    std::cerr << "unknown circuit kind: " << kind << "\n";
    return 1;
  }
  if (do_mirror) c = mirror(c);
  if (fold_scale > 1.0) c = fold_global(c, fold_scale);
  save_circuit(c, out_path);
  std::cout << "wrote " << out_path << " (" << c.gates.size() << " gates)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pauli-check extrapolation workbench"};
  app.require_subcommand(1);

  CommonFlags heatmap_flags;
  bool full_grid = false;
  auto* heatmap = app.add_subcommand("heatmap", "Random-Clifford PCE vs ZNE sweep");
  add_common(heatmap, heatmap_flags);
  heatmap->add_flag("--full-grid", full_grid, "Run the extended grid");

  CommonFlags markov_flags;
  auto* markov = app.add_subcommand("markov-check",
                                    "Logical-error curve vs the Markov model");
  add_common(markov, markov_flags);

  CommonFlags shadow_flags;
  bool dump_samples = false;
  auto* shadow = app.add_subcommand("shadow-compare",
                                    "Shadow estimators: unmitigated/robust/checked");
  add_common(shadow, shadow_flags);
  shadow->add_flag("--dump-samples", dump_samples, "Write per-shot sample logs");

  std::string pce_circuit, pce_noise, pce_model = "exponential", pce_out = "out";
  uint32_t pce_checks = 3;
  uint64_t pce_shots = 50000, pce_seed = 1;
  int pce_threads = 0;
  auto* pce = app.add_subcommand("pce", "Pauli-check extrapolation on one circuit");
  pce->add_option("--circuit", pce_circuit, "Payload circuit file")->required();
  pce->add_option("--noise", pce_noise, "Noise model JSON");
  pce->add_option("--checks", pce_checks, "Implemented check layers");
  pce->add_option("--model", pce_model, "linear|exponential");
  pce->add_option("--shots", pce_shots, "Total shot budget");
  pce->add_option("--seed", pce_seed, "Seed");
  pce->add_option("--threads", pce_threads, "Worker threads");
  pce->add_option("--out-dir", pce_out, "Output directory");

  std::string zne_circuit, zne_noise, zne_model = "richardson", zne_out = "out";
  std::vector<double> zne_scales = {1, 3, 5};
  uint64_t zne_shots = 50000, zne_seed = 1;
  int zne_threads = 0;
  auto* zne = app.add_subcommand("zne", "Zero-noise extrapolation on one circuit");
  zne->add_option("--circuit", zne_circuit, "Payload circuit file")->required();
  zne->add_option("--noise", zne_noise, "Noise model JSON");
  zne->add_option("--scales", zne_scales, "Scale factors (start at 1)")->delimiter(',');
  zne->add_option("--model", zne_model, "richardson|linear|exponential");
  zne->add_option("--shots", zne_shots, "Total shot budget");
  zne->add_option("--seed", zne_seed, "Seed");
  zne->add_option("--threads", zne_threads, "Worker threads");
  zne->add_option("--out-dir", zne_out, "Output directory");

  std::string gen_kind = "clifford", gen_out = "circuit.txt";
  uint32_t gen_qubits = 4, gen_depth = 25;
  uint64_t gen_seed = 1;
  bool gen_mirror = false;
  double gen_fold = 1.0;
  auto* gen = app.add_subcommand("gen-circuit", "Generate a payload circuit file");
  gen->add_option("--kind", gen_kind, "clifford|prep");
  gen->add_option("--qubits", gen_qubits, "Data qubits");
  gen->add_option("--depth", gen_depth, "Layers");
  gen->add_option("--seed", gen_seed, "Seed");
  gen->add_flag("--mirror", gen_mirror, "Append the inverse circuit");
  gen->add_option("--fold-scale", gen_fold, "Apply global folding at this scale");
  gen->add_option("-o,--output", gen_out, "Output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (heatmap->parsed()) return cmd_heatmap(heatmap_flags, full_grid);
    if (markov->parsed()) return cmd_markov(markov_flags);
    if (shadow->parsed()) return cmd_shadow_compare(shadow_flags, dump_samples);
    if (pce->parsed()) {
      return cmd_pce(pce_circuit, pce_noise, pce_checks, pce_model, pce_shots,
                     pce_seed, pce_threads, pce_out);
    }
    if (zne->parsed()) {
      return cmd_zne(zne_circuit, zne_noise, zne_scales, zne_model, zne_shots,
                     zne_seed, zne_threads, zne_out);
    }
    if (gen->parsed()) {
      return cmd_gen_circuit(gen_kind, gen_qubits, gen_depth, gen_seed, gen_mirror,
                             gen_fold, gen_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
