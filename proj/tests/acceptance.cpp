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

// End-to-end acceptance suite. Each case prints one PASS/FAIL line per
// criterion (plus the per-condition breakdown) and fails the ctest entry on
// any violated condition. Tolerances are fixed here, not tuned at runtime.

#include <doctest.h>

#include <chrono>
#include <exception>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "qemlab/checks.hpp"
#include "qemlab/circuit_ops.hpp"
#include "qemlab/errors.hpp"
#include "qemlab/experiments.hpp"
#include "qemlab/frame_sampler.hpp"
#include "qemlab/manifest.hpp"
#include "qemlab/pipelines.hpp"
#include "qemlab/shadows.hpp"
#include "qemlab/statevector.hpp"

using namespace qem;

namespace {

namespace fs = std::filesystem;

class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void require(const std::string& what, bool ok, const std::string& detail = "") {
    std::printf("    %-4s %s%s%s\n", ok ? "ok" : "FAIL", what.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    CHECK_MESSAGE(ok, title_, ": ", what, " ", detail);
    all_ok_ = all_ok_ && ok;
  }

  ~Report() {
    const char* verdict =
        std::uncaught_exceptions() > 0 ? "FAIL (aborted)" : all_ok_ ? "PASS" : "FAIL";
    std::printf("[ACCEPT] %s: %s\n", title_.c_str(), verdict);
    std::fflush(stdout);
  }

 private:
  std::string title_;
  bool all_ok_ = true;
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Circuit plus_one_payload(uint32_t n, uint32_t depth, uint64_t start_seed) {
  for (uint64_t seed = start_seed; seed < start_seed + 100000; ++seed) {
    Circuit c = random_clifford_circuit(n, depth, seed);
    if (ideal_z_parity(c) == 1) return c;
  }
  throw std::runtime_error("no +1 payload found");
}

double exact_expectation(const Circuit& prep, const PauliString& obs) {
  Statevector sv(prep.n_data);
  for (const auto& g : prep.gates) sv.apply_gate(g);
  return sv.expectation(obs);
}

double method_mean_error(const ShadowCompareResult& result, uint32_t subset,
                         const std::string& method) {
  for (const auto& s : result.summary) {
    if (s.subset == subset && s.method == method) return s.mean_abs_error;
  }
  throw std::runtime_error("missing summary row: " + method);
}

}  // namespace

TEST_SUITE_BEGIN("acceptance");

TEST_CASE("criterion 1: Markov-model reproduction") {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep("criterion 1 (Markov-model reproduction)");

  MarkovManifest manifest;
  manifest.n = 4;
  manifest.epsilon = 0.1;
  manifest.max_layers = 4;
  manifest.shots = 50000;
  manifest.seed = 0xacc1;
  const MarkovResult result = run_markov_check(manifest);

  // Frozen reference values from the closed form eps/(2^m (1-eps) + eps).
  const double expected[5] = {0.1, 0.1 / 1.9, 0.1 / 3.7, 0.1 / 7.3, 0.1 / 14.5};
  for (const auto& row : result.rows) {
    rep.require("prediction matches the closed form at m=" + std::to_string(row.m),
                std::abs(row.predicted - expected[row.m]) < 1e-12,
                num(row.predicted));
    const double sigma = std::sqrt(row.predicted * (1 - row.predicted) /
                                   static_cast<double>(row.kept_shots));
    rep.require(
        "empirical within 3 sigma at m=" + std::to_string(row.m),
        std::abs(row.empirical - row.predicted) <= 3 * sigma,
        num(row.empirical) + " vs " + num(row.predicted) + " (sigma " + num(sigma) + ")");
  }
  const double elapsed = seconds_since(t0);
  rep.require("runtime < 2 min", elapsed < 120.0, num(elapsed) + " s");
}

TEST_CASE("criterion 2: perfect-check soundness") {
  Report rep("criterion 2 (perfect-check soundness)");

  const uint32_t n = 4;
  const Circuit payload = plus_one_payload(n, 20, 0xacc2);
  NoiseModel noise;
  noise.p1 = 5e-4;
  noise.p2 = 5e-3;
  noise.noisy_checks = false;  // checks stay noiseless
  PauliString obs = PauliString::identity(n);
  obs.z = 0xF;

  const auto run_with_rights = [&](const std::vector<PauliString>& rights,
                                   uint64_t seed) {
    SandwichPlan plan;
    plan.payload = payload;
    for (const auto& right : rights) {
      plan.layers.push_back(find_check_pair(payload, right).value());
    }
    const auto sandwich = build_sandwich(plan);
    const auto records = run_shots_frames(sandwich.circuit, noise, 50000, seed);
    return expectation_z_basis(records, obs, /*post_select=*/true);
  };

  // (a) full 2n budget: 4 Z rights plus 4 X rights.
  std::vector<PauliString> rights_2n;
  for (uint32_t q = 0; q < n; ++q) rights_2n.push_back(PauliString::single_z(n, q));
  for (uint32_t q = 0; q < n; ++q) rights_2n.push_back(PauliString::single_x(n, q));
  const auto full = run_with_rights(rights_2n, 11);
  rep.require("2n checks keep a usable fraction", full.kept_shots > 10000,
              std::to_string(full.kept_shots) + " of 50000");
  rep.require("post-selected <ZZZZ> within 3 sigma of ideal +1 (2n checks)",
              std::abs(full.value - 1.0) <= 3 * full.std_error + 1e-9,
              num(full.value));

  // (b) Z-basis observable: the n Z checks alone suffice.
  std::vector<PauliString> rights_z(rights_2n.begin(), rights_2n.begin() + n);
  const auto zonly = run_with_rights(rights_z, 12);
  rep.require("post-selected <ZZZZ> within 3 sigma of ideal +1 (Z checks only)",
              std::abs(zonly.value - 1.0) <= 3 * zonly.std_error + 1e-9,
              num(zonly.value));
}

TEST_CASE("criterion 3: PCE-vs-ZNE heatmap trend at desk scale") {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep("criterion 3 (heatmap trend)");

  HeatmapManifest manifest;
  manifest.qubits = {4, 8};
  manifest.depths = {10, 40};
  manifest.circuits_per_cell = 20;
  manifest.shots = 50000;
  manifest.seed = 0xacc3;
  manifest.threads = 0;
  manifest.noise = HeatmapManifest::default_noise();  // p1 = 5e-4, p2 = 5e-3
  const HeatmapResult result = run_heatmap(manifest);

  const auto cell = [&](uint32_t n, uint32_t depth) -> const HeatmapCell& {
    for (const auto& c : result.cells) {
      if (c.n == n && c.depth == depth) return c;
    }
    throw std::runtime_error("missing cell");
  };

  const auto& big = cell(8, 40);
  rep.require("PCE <= best ZNE + 0.02 at (8, 40)",
              big.pce_err <= big.best_zne_err + 0.02,
              "pce " + num(big.pce_err) + " vs zne " + num(big.best_zne_err) + " (" +
                  big.best_zne_label + ")");
  const bool strictly_better = cell(8, 40).pce_err < cell(8, 40).best_zne_err ||
                               cell(8, 10).pce_err < cell(8, 10).best_zne_err ||
                               cell(4, 40).pce_err < cell(4, 40).best_zne_err;
  rep.require("PCE strictly beats best ZNE at a large cell", strictly_better);
  for (const auto& c : result.cells) {
    rep.require("PCE beats unmitigated at (" + std::to_string(c.n) + ", " +
                    std::to_string(c.depth) + ")",
                c.pce_err < c.unmitigated_err,
                "pce " + num(c.pce_err) + " vs unmitigated " + num(c.unmitigated_err));
  }
  const double elapsed = seconds_since(t0);
  rep.require("runtime < 1 hr", elapsed < 3600.0, num(elapsed) + " s");
}

TEST_CASE("criterion 3 supplement: crossover at extended scale") {
  // Not an acceptance clause: demonstrates that the PCE-over-ZNE crossover
  // the sweep targets does appear once circuits are deep enough that the
  // noise-scaled ZNE series degrades, with a gap close to the full-scale
  // reports. All parameters besides the grid coordinates match criterion 3.
  Report rep("criterion 3 supplement (crossover at n=12, depth=120)");
  HeatmapManifest manifest;
  manifest.qubits = {12};
  manifest.depths = {120};
  manifest.circuits_per_cell = 20;  // the criterion's own per-cell count
  manifest.shots = 50000;
  manifest.seed = 0x3c + 12 * 1000 + 120;
  const HeatmapResult result = run_heatmap(manifest);
  const auto& cell = result.cells.front();
  rep.require("PCE strictly beats the best ZNE at (12, 120)",
              cell.pce_err < cell.best_zne_err,
              "pce " + num(cell.pce_err) + " vs zne " + num(cell.best_zne_err) + " (" +
                  cell.best_zne_label + ")");
  rep.require("PCE beats unmitigated at (12, 120)",
              cell.pce_err < cell.unmitigated_err,
              "unmitigated " + num(cell.unmitigated_err));
}

TEST_CASE("criterion 4: extrapolation oracle equivalence") {
  Report rep("criterion 4 (extrapolation oracle equivalence)");

  std::vector<SeriesPoint> pts;
  for (int m = 1; m <= 4; ++m) {
    pts.push_back(SeriesPoint{static_cast<double>(m), 2.0 * std::pow(0.8, m) + 0.5, 0});
  }
  const auto fit = fit_exponential(pts, 8);
  rep.require("recovers a to 1e-6", std::abs(fit.a - 2.0) <= 1e-6, num(fit.a));
  rep.require("recovers b to 1e-6", std::abs(fit.b - 0.8) <= 1e-6, num(fit.b));
  rep.require("recovers c to 1e-6", std::abs(fit.c - 0.5) <= 1e-6, num(fit.c));

  const auto fine = fit_exponential(pts, 8, 0.6, 1.2, 1e-5);  // 10x finer grid
  rep.require("matches the 10x finer brute-force grid to 1e-6",
              std::abs(fit.extrapolated - fine.extrapolated) <= 1e-6,
              num(fit.extrapolated) + " vs " + num(fine.extrapolated));

  const auto rich = richardson(
      std::vector<SeriesPoint>{{1, 0.5, 0}, {3, 0.4, 0}, {5, 0.3, 0}});
  const bool weights_ok = std::abs(rich.weights[0] - 15.0 / 8) < 1e-12 &&
                          std::abs(rich.weights[1] + 5.0 / 4) < 1e-12 &&
                          std::abs(rich.weights[2] - 3.0 / 8) < 1e-12;
  rep.require("Richardson weights for (1,3,5) equal (15/8, -5/4, 3/8)", weights_ok);
}

TEST_CASE("criterion 5: shadow unbiasedness and the shadow-norm bound") {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep("criterion 5 (shadow unbiasedness + norm bound)");

  const uint32_t n = 4;
  const double d = 16;
  const Circuit prep = standin_prep(n, 2, 0xacc5);
  EstimatorConfig cfg;
  cfg.shadow_circuits = 10000;
  cfg.shots_per_circuit = 1;
  cfg.n_groups = 20;
  const auto set = collect_shadows(prep, NoiseModel{}, cfg, Protection::None, 0,
                                   0x5eed5);

  for (const char* literal : {"ZZII", "ZIII", "IZZI", "XXII"}) {
    const PauliString obs = parse_pauli(literal);
    const double exact = exact_expectation(prep, obs);
    double mean = 0, mean2 = 0;
    for (const auto& shot : set.shots) {
      const double v = (d + 1) * snapshot_eigenvalue(set.cliffords[shot.circuit_idx],
                                                     shot.outcome, obs);
      mean += v;
      mean2 += v * v;
    }
    mean /= static_cast<double>(set.shots.size());
    mean2 /= static_cast<double>(set.shots.size());
    const double var_emp = mean2 - mean * mean;
    rep.require(std::string("Var_emp <= 3 * 2^4 for ") + literal,
                var_emp <= 3 * d, num(var_emp));
    const double est = estimate_pauli(set, obs, cfg);
    const double bound = 3 * std::sqrt(var_emp / cfg.shadow_circuits);
    rep.require(std::string("|estimate - exact| within the bound for ") + literal,
                std::abs(est - exact) <= bound,
                num(est) + " vs " + num(exact) + " (bound " + num(bound) + ")");
  }
  const double elapsed = seconds_since(t0);
  rep.require("runtime < 5 min", elapsed < 300.0, num(elapsed) + " s");
}

TEST_CASE("criterion 6: robust-shadow correctness under GTM noise") {
  Report rep("criterion 6 (RS correctness under GTM)");

  const double p = 0.1;
  for (const uint32_t n : {2u, 4u}) {
    const double d = static_cast<double>(1u << n);
    EstimatorConfig cfg;
    cfg.n_groups = 20;
    ShadowOptions opts;
    opts.global_depol_after_clifford = p;

    const uint64_t rounds = 60000;
    const auto cal = rs_calibrate(NoiseModel{}, n, rounds, cfg, 0xacc6 + n, opts);
    const double f_expect = (1 - p) / (d + 1);
    // Round-estimate spread bounded by 1, so 3/sqrt(R) dominates 3 sigma.
    const double f_tol = 3.0 / std::sqrt(static_cast<double>(rounds));
    rep.require("f_hat within 3 sigma of (1-p)/(d+1), n=" + std::to_string(n),
                std::abs(cal.f_hat - f_expect) <= f_tol,
                num(cal.f_hat) + " vs " + num(f_expect));

    const Circuit prep = standin_prep(n, 1, 0x6a + n);
    cfg.shadow_circuits = 30000;
    cfg.shots_per_circuit = 2;
    const auto set = collect_shadows(prep, NoiseModel{}, cfg, Protection::None, 0,
                                     0x77 + n, opts);
    PauliString obs = PauliString::identity(n);
    obs.z = (1ull << n) - 1;  // full-weight Z string
    const double ideal = exact_expectation(prep, obs);
    const double robust = rs_estimate(set, obs, cal, cfg);
    const double plain = estimate_pauli(set, obs, cfg);
    const uint64_t samples = static_cast<uint64_t>(cfg.shadow_circuits) * 2;
    const double sigma =
        1.2533 * std::sqrt(3.0 * d / static_cast<double>(samples));
    rep.require("rs_estimate within 0.02 + 3 sigma of ideal, n=" + std::to_string(n),
                std::abs(robust - ideal) <= 0.02 + 3 * sigma,
                num(robust) + " vs " + num(ideal));
    rep.require("unmitigated bias matches the (1-p) factor, n=" + std::to_string(n),
                std::abs(plain - (1 - p) * ideal) <= 3 * sigma,
                num(plain) + " vs " + num((1 - p) * ideal));
  }

  const uint64_t r = rs_sample_count(0.01, 0.05, 16, 1.0);
  const double base = 136.0 * std::log(2.0 / 0.05) * (1 + 1e-4) *
                      std::pow(1 + 1.0 / 16, 2) / std::pow(1 - 1.0 / 16, 2);
  rep.require("rs_sample_count carries the 10,000x factor at eps = 0.01",
              std::llabs(static_cast<long long>(r) -
                         static_cast<long long>(std::ceil(base * 10000))) <= 1,
              std::to_string(r));
}

TEST_CASE("criterion 7: protected-shadow orderings") {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep("criterion 7 (protected-shadow orderings)");

  // (a) 4-qubit prep, full connectivity, p1 = 0.002, p2 = 0.02. Sample
  // counts follow the benchmark protocol (10,000 shadow circuits); the prep
  // is deep enough to carry real noise, which is what extended protection
  // mitigates and calibration-based estimation cannot.
  ShadowCompareManifest m4;
  m4.n = 4;
  m4.prep_layers = 4;
  m4.prep_seed = 0x4a;
  m4.seed = 0xacc7;
  m4.estimator.shadow_circuits = 10000;
  m4.estimator.shots_per_circuit = 50;
  m4.estimator.subset_sizes = {100, 400, 1000, 4000, 10000};
  m4.checks_used = 3;
  m4.implemented_layers = {1, 2, 3, 4};
  m4.prepcheck_layers = {1, 2, 3};
  m4.rs_rounds = 50000;
  const auto res4 = run_shadow_compare(m4);

  const double err_rs = method_mean_error(res4, 10000, "robust");
  const double err_unmit = method_mean_error(res4, 10000, "unmitigated");
  const double err_full_extrap = method_mean_error(res4, 10000, "prepcheck_extrap4");
  const double err_check_extrap = method_mean_error(res4, 10000, "check_extrap4");
  const double err_check4 = method_mean_error(res4, 10000, "check4");

  rep.require("full-circuit PCE extrapolation <= robust shadows",
              err_full_extrap <= err_rs,
              num(err_full_extrap) + " vs " + num(err_rs));
  // "Similar performance to its implemented counterpart": the extrapolated
  // estimate may not be worse than the implemented one by more than 0.02
  // (being better is the point of extrapolating past noisy layers).
  rep.require("extrapolated-4 error <= implemented-4 error + 0.02",
              err_check_extrap <= err_check4 + 0.02,
              num(err_check_extrap) + " vs " + num(err_check4));
  rep.require("protection ordering: full <= clifford-only <= unmitigated",
              err_full_extrap <= err_check_extrap && err_check_extrap <= err_unmit,
              num(err_full_extrap) + " / " + num(err_check_extrap) + " / " +
                  num(err_unmit));

  // (b) 8-qubit prep: the PCE-over-RS gap must not shrink under Gaussian-
  // inhomogeneous noise at matched seeds.
  ShadowCompareManifest m8;
  m8.n = 8;
  m8.prep_layers = 1;
  m8.prep_seed = 0x8b;
  m8.seed = 0xacc8;
  m8.estimator.shadow_circuits = 4000;
  m8.estimator.shots_per_circuit = 50;
  m8.estimator.subset_sizes = {4000};
  m8.checks_used = 4;
  m8.implemented_layers = {1, 2, 3, 4};
  m8.prepcheck_layers = {};
  m8.rs_rounds = 20000;
  m8.noise.p1 = 0.002;
  m8.noise.p2 = 0.02;
  const auto res_hom = run_shadow_compare(m8);

  ShadowCompareManifest m8g = m8;
  m8g.noise = NoiseModel{};
  m8g.noise.noisy_checks = true;
  m8g.noise.gaussian.enabled = true;
  m8g.noise.gaussian.mean1 = 0.002;
  m8g.noise.gaussian.sd1 = 0.0005;
  m8g.noise.gaussian.mean2 = 0.02;
  m8g.noise.gaussian.sd2 = 0.005;
  m8g.noise.gaussian.seed = 0x6055;
  const auto res_inh = run_shadow_compare(m8g);

  const double gap_hom = method_mean_error(res_hom, 4000, "robust") -
                         method_mean_error(res_hom, 4000, "check_extrap8");
  const double gap_inh = method_mean_error(res_inh, 4000, "robust") -
                         method_mean_error(res_inh, 4000, "check_extrap8");
  rep.require("PCE-over-RS gap does not shrink under inhomogeneous noise",
              gap_inh >= gap_hom,
              "inhomogeneous " + num(gap_inh) + " vs homogeneous " + num(gap_hom));

  const double elapsed = seconds_since(t0);
  rep.require("finished in a desk-scale run", elapsed < 3600.0, num(elapsed) + " s");
}

TEST_CASE("criterion 8: byte-identical CLI reruns") {
  Report rep("criterion 8 (deterministic CLI outputs)");

#ifndef QEMLAB_BIN_DIR
#error "QEMLAB_BIN_DIR must point at the CLI build directory"
#endif
  const std::string bin = std::string(QEMLAB_BIN_DIR) + "/qemlab";
  const fs::path root = fs::temp_directory_path() / "qemlab_accept8";
  fs::remove_all(root);
  fs::create_directories(root);

  // Small manifests keep the rerun cheap while covering every command.
  HeatmapManifest hm;
  hm.qubits = {6};
  hm.depths = {4};
  hm.circuits_per_cell = 2;
  hm.shots = 2000;
  hm.scale_sets = {{1, 3, 5}};
  hm.seed = 5;
  write_text_file((root / "heatmap.json").string(), to_json_text(hm));

  MarkovManifest mm;
  mm.shots = 4000;
  mm.max_layers = 2;
  write_text_file((root / "markov.json").string(), to_json_text(mm));

  ShadowCompareManifest sm;
  sm.n = 3;
  sm.estimator.shadow_circuits = 100;
  sm.estimator.shots_per_circuit = 4;
  sm.estimator.subset_sizes = {100};
  sm.checks_used = 2;
  sm.implemented_layers = {1, 2};
  sm.prepcheck_layers = {1, 2};
  sm.model = FitKind::Linear;
  sm.rs_rounds = 500;
  sm.dump_samples = true;
  write_text_file((root / "shadow.json").string(), to_json_text(sm));

  const auto run = [&](const std::string& args) {
    const std::string cmd = bin + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };
  // The criterion covers the CSV outputs (and the circuit text file); the
  // manifest echo legitimately records the actual output directory.
  const auto slurp_dir = [&](const fs::path& dir) {
    std::string all;
    std::vector<fs::path> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
      if (!entry.is_regular_file()) continue;
      const auto ext = entry.path().extension();
      if (ext == ".csv" || ext == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      all += f.filename().string() + "\n" + read_text_file(f.string()) + "\n";
    }
    return all;
  };
  const auto count_csv = [&](const fs::path& dir) {
    size_t count = 0;
    for (const auto& entry : fs::recursive_directory_iterator(dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".csv") ++count;
    }
    return count;
  };

  const struct {
    const char* name;
    std::string args;
  } commands[] = {
      {"gen-circuit", "gen-circuit --qubits 3 --depth 8 --seed 4 --mirror -o "},
      {"markov-check", "markov-check --manifest " + (root / "markov.json").string() +
                           " --out-dir "},
      {"heatmap", "heatmap --manifest " + (root / "heatmap.json").string() +
                      " --out-dir "},
      {"shadow-compare", "shadow-compare --manifest " +
                             (root / "shadow.json").string() + " --out-dir "},
  };
  for (const auto& command : commands) {
    const fs::path out1 = root / (std::string(command.name) + "_1");
    const fs::path out2 = root / (std::string(command.name) + "_2");
    std::string args1 = command.args;
    std::string args2 = command.args;
    if (std::string(command.name) == "gen-circuit") {
      fs::create_directories(out1);
      fs::create_directories(out2);
      args1 += (out1 / "c.txt").string();
      args2 += (out2 / "c.txt").string();
    } else {
      args1 += out1.string();
      args2 += out2.string();
    }
    const int rc1 = run(args1);
    const int rc2 = run(args2);
    rep.require(std::string(command.name) + " exits cleanly", rc1 == 0 && rc2 == 0);
    if (std::string(command.name) != "gen-circuit") {
      rep.require(std::string(command.name) + " wrote CSV output",
                  count_csv(out1) >= 1);
    }
    rep.require(std::string(command.name) + " reruns byte-identically",
                slurp_dir(out1) == slurp_dir(out2));
  }

  // pce and zne consume a circuit file produced by gen-circuit.
  const std::string payload = (root / "gen-circuit_1" / "c.txt").string();
  for (const std::string sub :
       {std::string("pce --checks 2 --model linear --shots 3000"),
        std::string("zne --scales 1,3,5 --model richardson --shots 3000")}) {
    const std::string name = sub.substr(0, 3);
    const fs::path out1 = root / (name + "_1");
    const fs::path out2 = root / (name + "_2");
    const std::string base = sub + " --circuit " + payload + " --seed 9 --out-dir ";
    const int rc1 = run(base + out1.string());
    const int rc2 = run(base + out2.string());
    rep.require(name + " exits cleanly", rc1 == 0 && rc2 == 0);
    rep.require(name + " reruns byte-identically",
                slurp_dir(out1) == slurp_dir(out2));
  }
}

TEST_SUITE_END();
