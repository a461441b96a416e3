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

#include "tsac/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "tsac/errors.hpp"
#include "tsac/metrics.hpp"

namespace tsac {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double pairwise_sum_range(const double* first, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += first[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_range(first, half) + pairwise_sum_range(first + half, n - half);
}

}  // namespace

double pairwise_sum(const std::vector<double>& values) {
  return pairwise_sum_range(values.data(), values.size());
}

int rf_chains_for_kappa(double kappa, int n_r) {
  return static_cast<int>(std::ceil(kappa * n_r - 1e-9));
}

double snr_from_db(double snr_db) { return std::pow(10.0, snr_db / 10.0); }

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return splitmix64(splitmix64(master_seed) ^ trial_index);
}

std::vector<GridPoint> SweepConfig::grid() const {
  std::vector<GridPoint> points;
  for (int n_r : n_r_list) {
    if (kappa) {
      points.push_back({n_r, rf_chains_for_kappa(*kappa, n_r)});
    } else {
      for (int n_rf : n_rf_list) points.push_back({n_r, n_rf});
    }
  }
  return points;
}

void SweepConfig::validate() const {
  if (n_r_list.empty()) throw ConfigError("no array size given (n_r or n_r_list)");
  for (int n_r : n_r_list)
    if (n_r < 1) throw ConfigError("n_r must be positive");
  if (kappa) {
    if (!(*kappa > 0.0 && *kappa <= 1.0)) throw ConfigError("kappa must lie in (0, 1]");
  } else if (n_rf_list.empty()) {
    throw ConfigError("no RF chain count given (n_rf or kappa)");
  }
  if (n_u < 1) throw ConfigError("n_u must be positive");
  if (bits < 1) throw ConfigError("bits must be at least 1");
  if (snr_db_list.empty()) throw ConfigError("snr_db needs at least one value");
  for (double s : snr_db_list)
    if (!std::isfinite(s)) throw ConfigError("snr_db values must be finite");
  if (!(mean_paths > 0.0)) throw ConfigError("mean_paths must be positive");
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (designs.empty()) throw ConfigError("designs must name at least one design");
  if (!(spacing_ratio > 0.0 && spacing_ratio <= 0.5))
    throw ConfigError("antenna spacing ratio must lie in (0, 1/2]");
  if (codebook_size && *codebook_size < 1) throw ConfigError("codebook_size must be positive");

  const bool any_codebook = std::any_of(designs.begin(), designs.end(), uses_codebook);
  for (const GridPoint& p : grid()) {
    if (p.n_rf < 1 || p.n_rf > p.n_r)
      throw ConfigError("N_RF = " + std::to_string(p.n_rf) + " must lie in [1, N_r = " +
                        std::to_string(p.n_r) + "]");
    if (n_u > p.n_rf)
      throw ConfigError("n_u = " + std::to_string(n_u) + " exceeds N_RF = " + std::to_string(p.n_rf));
    const int v = codebook_size.value_or(p.n_r);
    if (any_codebook && v < p.n_rf)
      throw ConfigError("codebook_size = " + std::to_string(v) + " is smaller than N_RF = " +
                        std::to_string(p.n_rf));
  }
}

SweepResult run_sweep(const SweepConfig& config, const SweepOptions& options) {
  config.validate();
  const std::vector<GridPoint> grid = config.grid();
  const AdcModel adc = make_adc_model(config.bits);
  const std::size_t n_snr = config.snr_db_list.size();
  std::vector<double> snr(n_snr);
  for (std::size_t s = 0; s < n_snr; ++s) snr[s] = snr_from_db(config.snr_db_list[s]);

  // Distinct array sizes in first-seen order, each with its shared codebook.
  std::vector<int> sizes;
  for (const GridPoint& p : grid)
    if (std::find(sizes.begin(), sizes.end(), p.n_r) == sizes.end()) sizes.push_back(p.n_r);
  std::map<int, AngleCodebook> codebooks;
  for (int n_r : sizes)
    codebooks.emplace(n_r, make_codebook(ArrayGeometry{n_r, config.spacing_ratio},
                                         config.codebook_size.value_or(n_r)));

  // samples[cell][trial]; cell = (design, grid point, snr) in row-major order.
  const std::size_t n_designs = config.designs.size();
  const std::size_t n_cells = n_designs * grid.size() * n_snr;
  const auto trials = static_cast<std::size_t>(config.trials);
  std::vector<std::vector<double>> samples(n_cells, std::vector<double>(trials));
  auto cell = [&](std::size_t d, std::size_t g, std::size_t s) {
    return (d * grid.size() + g) * n_snr + s;
  };

  auto run_trial = [&](std::size_t t) {
    const std::uint64_t seed = derive_trial_seed(config.master_seed, t);
    for (int n_r : sizes) {
      Rng rng(seed);
      const ArrayGeometry geometry{n_r, config.spacing_ratio};
      const ChannelMatrix channel = generate_channel({config.n_u, config.mean_paths, geometry}, rng);
      const AngleCodebook& codebook = codebooks.at(n_r);

      for (std::size_t g = 0; g < grid.size(); ++g) {
        if (grid[g].n_r != n_r) continue;
        const int n_rf = grid[g].n_rf;
        for (std::size_t d = 0; d < n_designs; ++d) {
          const Design design = config.designs[d];
          if (design == Design::GreedyMi) {
            for (std::size_t s = 0; s < n_snr; ++s) {
              const Combiner c = greedy_mi(channel.h, n_rf, codebook, snr[s], adc);
              samples[cell(d, g, s)][t] =
                  mutual_information(channel.h, c, MiContext{snr[s], adc, std::nullopt});
            }
            continue;
          }
          Combiner c;
          switch (design) {
            case Design::ArvTsac: c = arv_tsac(channel.h, n_rf, codebook); break;
            case Design::Arv: c = arv_only(channel.h, n_rf, codebook); break;
            case Design::SvdDft: c = svd_dft_combiner(channel.h, n_rf); break;
            case Design::Svd: c = svd_combiner(channel.h, n_rf); break;
            case Design::GreedyMi: break;
          }
          for (std::size_t s = 0; s < n_snr; ++s)
            samples[cell(d, g, s)][t] =
                mutual_information(channel.h, c, MiContext{snr[s], adc, std::nullopt});
        }
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(trials, 1)));
  if (threads == 1) {
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < trials; t = next++) {
          try {
            run_trial(t);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = trials;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  SweepResult result;
  result.rows.reserve(n_cells);
  for (std::size_t d = 0; d < n_designs; ++d)
    for (std::size_t g = 0; g < grid.size(); ++g)
      for (std::size_t s = 0; s < n_snr; ++s) {
        std::vector<double>& values = samples[cell(d, g, s)];
        SweepRow row;
        row.design = config.designs[d];
        row.n_r = grid[g].n_r;
        row.n_rf = grid[g].n_rf;
        row.snr_db = config.snr_db_list[s];
        row.bits = config.bits;
        row.trials = config.trials;
        const double n = static_cast<double>(trials);
        row.mi_mean = pairwise_sum(values) / n;
        if (trials > 1) {
          std::vector<double> sq(trials);
          for (std::size_t t = 0; t < trials; ++t)
            sq[t] = (values[t] - row.mi_mean) * (values[t] - row.mi_mean);
          row.mi_std = std::sqrt(pairwise_sum(sq) / (n - 1.0));
        }
        row.mi_sem = row.mi_std / std::sqrt(n);
        if (options.keep_samples) row.samples = std::move(values);
        result.rows.push_back(std::move(row));
      }
  return result;
}

}  // namespace tsac
