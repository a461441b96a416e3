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

// tsac: batch sweeps, combiner dumps and self-validation.
//
//   tsac sweep --config <path> --out <csv> [--set key=value ...]
//   tsac design --config <path> --out <dir> [--set key=value ...]
//   tsac validate

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tsac/combiners.hpp"
#include "tsac/config.hpp"
#include "tsac/errors.hpp"
#include "tsac/output.hpp"
#include "tsac/simulation.hpp"
#include "tsac/validation.hpp"

namespace {

int run_sweep_command(const std::string& config_path, const std::string& out_path,
                      const std::vector<std::string>& overrides, unsigned threads) {
  const tsac::SweepConfig config = tsac::load_config(config_path, overrides);
  tsac::SweepOptions options;
  options.threads = threads;
  const tsac::SweepResult result = tsac::run_sweep(config, options);
  tsac::emit_csv(result, out_path);
  std::printf("wrote %zu rows to %s\n", result.rows.size(), out_path.c_str());
  return 0;
}

void dump(const std::filesystem::path& path, const tsac::CMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  tsac::write_matrix(out, m);
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

int run_design_command(const std::string& config_path, const std::string& out_dir,
                       const std::vector<std::string>& overrides) {
  const tsac::SweepConfig config = tsac::load_config(config_path, overrides);
  const tsac::GridPoint point = config.grid().front();
  const double snr = tsac::snr_from_db(config.snr_db_list.front());
  const tsac::AdcModel adc = tsac::make_adc_model(config.bits);
  const tsac::ArrayGeometry geometry{point.n_r, config.spacing_ratio};

  tsac::Rng rng(tsac::derive_trial_seed(config.master_seed, 0));
  const tsac::ChannelMatrix channel =
      tsac::generate_channel({config.n_u, config.mean_paths, geometry}, rng);
  const tsac::AngleCodebook codebook =
      tsac::make_codebook(geometry, config.codebook_size.value_or(point.n_r));

  const std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  dump(dir / "channel.txt", channel.h);
  std::printf("N_r=%d N_RF=%d N_u=%d snr_db=%g bits=%d\n", point.n_r, point.n_rf, config.n_u,
              config.snr_db_list.front(), config.bits);

  for (tsac::Design design : config.designs) {
    tsac::Combiner c;
    switch (design) {
      case tsac::Design::ArvTsac: c = tsac::arv_tsac(channel.h, point.n_rf, codebook); break;
      case tsac::Design::Arv: c = tsac::arv_only(channel.h, point.n_rf, codebook); break;
      case tsac::Design::SvdDft: c = tsac::svd_dft_combiner(channel.h, point.n_rf); break;
      case tsac::Design::Svd: c = tsac::svd_combiner(channel.h, point.n_rf); break;
      case tsac::Design::GreedyMi: c = tsac::greedy_mi(channel.h, point.n_rf, codebook, snr, adc); break;
    }
    const std::string tag(tsac::design_tag(design));
    dump(dir / (tag + "_w1.txt"), c.w1);
    dump(dir / (tag + "_w2.txt"), c.w2);
    dump(dir / (tag + "_effective.txt"), c.effective);
    std::printf("%-10s", tag.c_str());
    if (!c.selected_angles.empty()) {
      std::printf(" angles:");
      for (double a : c.selected_angles) std::printf(" %.6g", a);
    }
    std::printf("\n");
  }
  return 0;
}

int run_validate_command(double beta_scale) {
  tsac::ValidationOptions options;
  for (double& b : options.beta_table) b *= beta_scale;
  bool all = true;
  for (const tsac::CheckResult& r : tsac::run_validation(options)) {
    std::printf("[%s] %s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str(), r.detail.c_str());
    all = all && r.passed;
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-stage analog combining simulator for low-resolution ADC receivers"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path;
  std::vector<std::string> overrides;
  unsigned threads = 0;
  auto* sweep = app.add_subcommand("sweep", "Run a Monte Carlo sweep and write CSV");
  sweep->add_option("--config", config_path, "Sweep config file")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", out_path, "Output CSV path")->required();
  sweep->add_option("--set", overrides, "Override a config key (key=value)");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* design = app.add_subcommand("design", "Dump combiner matrices for one seeded channel");
  design->add_option("--config", config_path, "Sweep config file")->required()->check(CLI::ExistingFile);
  design->add_option("--out", out_path, "Output directory")->required();
  design->add_option("--set", overrides, "Override a config key (key=value)");

  double beta_scale = 1.0;
  auto* validate = app.add_subcommand("validate", "Run the built-in oracle checks");
  validate->add_option("--beta-scale", beta_scale,
                       "Multiply the tabulated distortion constants (negative control)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sweep) return run_sweep_command(config_path, out_path, overrides, threads);
    if (*design) return run_design_command(config_path, out_path, overrides);
    if (*validate) return run_validate_command(beta_scale);
  } catch (const tsac::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
