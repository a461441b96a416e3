// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tsac/combiners.hpp"
#include "tsac/config.hpp"
#include "tsac/metrics.hpp"
#include "tsac/output.hpp"
#include "tsac/quantization.hpp"
#include "tsac/simulation.hpp"

using namespace tsac;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

const SweepRow& find_row(const SweepResult& r, Design d, int n_rf, double snr_db) {
  for (const SweepRow& row : r.rows)
    if (row.design == d && row.n_rf == n_rf && row.snr_db == snr_db) return row;
  throw std::runtime_error("missing sweep row");
}

Outcome closed_form_bounds() {
  const AdcModel b2 = make_adc_model(2);
  const double svd_ub = svd_upper_bound(8, b2);
  const double gen_ub = general_upper_bound(8, 64, b2);
  bool ok = std::abs(svd_ub - 24.72) <= 0.01 && std::abs(gen_ub - 47.46) <= 0.01;
  double worst = 0.0;
  for (int b = 1; b <= 5; ++b) {
    const double oracle = lloyd_max_distortion(b, 1'000'000, 7000 + b);
    worst = std::max(worst, std::abs(make_adc_model(b).beta - oracle) / oracle);
  }
  ok = ok && worst < 0.01;
  return {ok, "svd_ub(8,b=2)=" + fmt("%.4f", svd_ub) + " general_ub(8,64,b=2)=" + fmt("%.4f", gen_ub) +
                  " max beta rel err vs Lloyd-Max=" + fmt("%.3g", worst)};
}

Outcome closed_form_consistency() {
  Rng rng(11);
  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const CMatrix h = generate_channel({2, 3.0, {16, 0.5}}, rng).h;
    const SingularProfile profile = singular_profile(h, 8);
    const Combiner c = theorem_combiner(h, 8, 2);
    for (int b : {1, 2, 3})
      for (double rho : {0.1, 1.0, 10.0}) {
        const MiContext ctx{rho, make_adc_model(b), std::nullopt};
        worst = std::max(worst, std::abs(mutual_information(h, c, ctx) - rate_theorem_form(profile, ctx)));
      }
  }
  return {worst < 1e-8, "max |MI - closed form| = " + fmt("%.3g", worst) + " over 900 evaluations"};
}

Outcome equal_lambda_optimality() {
  std::mt19937_64 rng(12);
  Rng haar(13);
  const AdcModel adc = make_adc_model(2);
  const MiContext ctx{1.0, adc, std::nullopt};
  double worst_eq = 0.0;
  double worst_oracle = 0.0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (double lambda : {1.0, 4.0})
    for (int n_rf : {4, 8}) {
      const CMatrix h = oracle::equal_lambda_channel(16, 2, lambda, rng);
      const Combiner c = theorem_combiner(h, n_rf, 2);
      const double best = mutual_information(h, c, ctx);
      worst_eq = std::max(worst_eq, std::abs(best - optimal_mi_equal(2, n_rf, lambda, ctx)));
      worst_oracle = std::max(worst_oracle, std::abs(best - oracle::direct_mi(h, c.effective, adc.alpha, adc.beta, 1.0)));
      for (int k = 0; k < 1000; ++k)
        min_margin = std::min(min_margin, best - mutual_information(h, random_semi_unitary(16, n_rf, haar), ctx));
    }
  const bool ok = worst_eq < 1e-8 && worst_oracle < 1e-8 && min_margin >= -1e-9;
  return {ok, "max |MI - optimum| = " + fmt("%.3g", worst_eq) + ", min margin over 4000 Haar draws = " +
                  fmt("%.4f", min_margin) + " bits"};
}

Outcome svd_saturation() {
  SweepConfig cfg;
  cfg.n_r_list = {64};
  cfg.n_rf_list = {16};
  cfg.n_u = 4;
  cfg.bits = 2;
  cfg.snr_db_list = {-10, -5, 0, 5, 10, 15, 20, 25, 30, 35, 40};
  cfg.trials = 500;
  cfg.master_seed = 14;
  cfg.designs = {Design::Svd};
  const SweepResult r = run_sweep(cfg);
  const double ub = svd_upper_bound(4, make_adc_model(2));
  bool below = true;
  double max_mean = 0.0;
  for (const SweepRow& row : r.rows) {
    below = below && row.mi_mean < ub;
    max_mean = std::max(max_mean, row.mi_mean);
  }
  const double at40 = find_row(r, Design::Svd, 16, 40.0).mi_mean;
  const bool ok = below && ub - at40 <= 0.3;
  return {ok, "bound=" + fmt("%.4f", ub) + " max mean=" + fmt("%.4f", max_mean) + " gap at 40 dB=" +
                  fmt("%.4f", ub - at40)};
}

Outcome scaling_law() {
  SweepConfig cfg;
  cfg.n_r_list = {48, 96, 192, 384};
  cfg.kappa = 1.0 / 3.0;
  cfg.n_u = 4;
  cfg.bits = 2;
  cfg.snr_db_list = {0.0};
  cfg.mean_paths = 4.0;
  cfg.trials = 200;
  cfg.master_seed = 15;
  cfg.designs = {Design::SvdDft, Design::Svd};
  const SweepResult r = run_sweep(cfg);
  std::map<int, double> two_stage, one_stage;
  for (const SweepRow& row : r.rows) (row.design == Design::SvdDft ? two_stage : one_stage)[row.n_rf] = row.mi_mean;
  const double s2 = scaling_slope(two_stage);
  const double s1 = scaling_slope(one_stage);
  const bool ok = two_stage.size() == 4 && s2 >= 0.7 * 4 && s2 <= 1.1 * 4 && s1 < 0.5 * 4;
  return {ok, "SVD_DFT slope=" + fmt("%.3f", s2) + " (window [2.8, 4.4]), SVD slope=" + fmt("%.3f", s1) +
                  " (limit 2)"};
}

Outcome fig2_trend() {
  SweepConfig cfg;
  cfg.n_r_list = {64};
  cfg.n_rf_list = {rf_chains_for_kappa(1.0 / 3.0, 64)};
  cfg.n_u = 8;
  cfg.bits = 2;
  cfg.snr_db_list = {-10.0, 0.0, 10.0};
  cfg.mean_paths = 3.0;
  cfg.trials = 500;
  cfg.master_seed = 16;
  cfg.designs = {Design::ArvTsac, Design::Arv, Design::SvdDft, Design::Svd};
  const SweepResult r = run_sweep(cfg);
  const int n_rf = cfg.n_rf_list[0];
  bool ok = n_rf == 22;
  std::string detail = "N_RF=" + std::to_string(n_rf);
  for (double s : cfg.snr_db_list) {
    const double tsac = find_row(r, Design::ArvTsac, n_rf, s).mi_mean;
    const double arv = find_row(r, Design::Arv, n_rf, s).mi_mean;
    const double sdft = find_row(r, Design::SvdDft, n_rf, s).mi_mean;
    const double svd = find_row(r, Design::Svd, n_rf, s).mi_mean;
    ok = ok && tsac >= arv && sdft >= svd;
    if (s == 0.0) ok = ok && std::abs(tsac - sdft) <= 1.0;
    detail += " | " + fmt("%g dB:", s) + " ARV_TSAC=" + fmt("%.3f", tsac) + " ARV=" + fmt("%.3f", arv) +
              " SVD_DFT=" + fmt("%.3f", sdft) + " SVD=" + fmt("%.3f", svd);
  }
  return {ok, detail};
}

Outcome quantizer_model() {
  Rng rng(17);
  std::normal_distribution<double> g(0.0, std::sqrt(0.5));
  CVector y(1'000'000);
  for (auto& v : y) {
    const double re = g(rng);
    const double im = g(rng);
    v = Complex(re, im);
  }
  double worst = 0.0;
  double b1 = 0.0;
  for (int b = 1; b <= 5; ++b) {
    const AdcModel adc = make_adc_model(b);
    const double measured = (y - scalar_quantize(adc, y)).squaredNorm() / y.squaredNorm();
    worst = std::max(worst, std::abs(measured - adc.beta) / adc.beta);
    if (b == 1) b1 = measured;
  }
  const double analytic = 1.0 - 2.0 / std::numbers::pi;
  const double b1_err = std::max(std::abs(b1 - analytic), std::abs(make_adc_model(1).beta - analytic)) / analytic;
  return {worst < 0.01 && b1_err < 0.002,
          "max rel err b=1..5 = " + fmt("%.3g", worst) + ", b=1 vs 1-2/pi = " + fmt("%.3g", b1_err)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Outcome determinism() {
  const std::string path = std::string(TSAC_SOURCE_DIR) + "/configs/smoke.cfg";
  const SweepConfig cfg = load_config(path);
  const auto dir = std::filesystem::temp_directory_path();
  const auto a = dir / "tsac_acceptance_a.csv";
  const auto b = dir / "tsac_acceptance_b.csv";
  emit_csv(run_sweep(cfg, {1, false}), a.string());
  emit_csv(run_sweep(cfg, {4, false}), b.string());
  const std::string x = slurp(a);
  const std::string y = slurp(b);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  return {x == y && !x.empty(), std::to_string(x.size()) + " bytes, " + (x == y ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"closed-form bound values", closed_form_bounds},
      {"MI vs theorem-form rate consistency", closed_form_consistency},
      {"equal-singular-value optimality", equal_lambda_optimality},
      {"one-stage SVD saturation", svd_saturation},
      {"MI scaling law at kappa = 1/3", scaling_law},
      {"design ordering replica (N_r = 64)", fig2_trend},
      {"quantizer model validation", quantizer_model},
      {"sweep determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.passed) ++failures;
    std::printf("%s %s: %s (%.1f s)\n", o.passed ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
