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

// Seeded Monte Carlo sweeps over combiner designs, SNR and RF-chain grids.
//
// Trial t draws its channel from derive_trial_seed(master_seed, t), and every
// design and grid point of that trial sees the same realization. Results depend
// only on the config, never on thread count or scheduling.

#ifndef TSAC_SIMULATION_HPP
#define TSAC_SIMULATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "tsac/combiners.hpp"

namespace tsac {

struct GridPoint {
  int n_r = 0;
  int n_rf = 0;
};

struct SweepConfig {
  std::vector<int> n_r_list;   // one entry for fixed-array sweeps
  std::vector<int> n_rf_list;  // explicit RF chain counts (ignored when kappa is set)
  std::optional<double> kappa;  // N_RF = ceil(kappa * N_r) per array size
  int n_u = 1;
  int bits = 2;
  std::vector<double> snr_db_list = {0.0};
  double mean_paths = 3.0;
  int trials = 500;
  std::uint64_t master_seed = 0;
  std::vector<Design> designs = {kAllDesigns.begin(), kAllDesigns.end()};
  std::optional<int> codebook_size;  // defaults to N_r of each grid point
  double spacing_ratio = 0.5;

  // (N_r, N_RF) pairs in config order.
  std::vector<GridPoint> grid() const;

  // Throws ConfigError on any violated constraint.
  void validate() const;
};

struct SweepRow {
  Design design = Design::Svd;
  int n_r = 0;
  int n_rf = 0;
  double snr_db = 0.0;
  int bits = 0;
  int trials = 0;
  double mi_mean = 0.0;
  double mi_std = 0.0;
  double mi_sem = 0.0;
  std::vector<double> samples;  // per-trial MI, only filled when requested
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

struct SweepOptions {
  unsigned threads = 0;  // 0 picks std::thread::hardware_concurrency()
  bool keep_samples = false;
};

// N_RF = ceil(kappa * n_r), tolerant to floating-point noise just above an integer.
int rf_chains_for_kappa(double kappa, int n_r);

double snr_from_db(double snr_db);

// splitmix64-style mixing of (master_seed, trial_index); injective in trial_index.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

SweepResult run_sweep(const SweepConfig& config, const SweepOptions& options = {});

// Summation by recursive halving; the result depends only on the order of `values`.
double pairwise_sum(const std::vector<double>& values);

}  // namespace tsac

#endif  // TSAC_SIMULATION_HPP
