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

// Sweep configuration files.
//
// One "key = value" pair per line, '#' starts a comment. Lists are comma
// separated. Recognized keys and their defaults:
//
//   n_r            array size (or n_r_list for several)         required
//   n_rf           RF chain counts, list (or kappa)              required
//   kappa          N_RF / N_r; N_RF = ceil(kappa * N_r)
//   n_r_list       array sizes, list
//   n_u            users                                         1
//   bits           ADC resolution                                2
//   snr_db         SNR points in dB, list                        0
//   mean_paths     Poisson mean of the path count                3
//   trials         Monte Carlo trials                            500
//   seed           master seed                                   0
//   designs        list of ARV_TSAC, ARV, SVD_DFT, SVD, GREEDY_MI  all five
//   codebook_size  ARV codebook size                             N_r

#ifndef TSAC_CONFIG_HPP
#define TSAC_CONFIG_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tsac/simulation.hpp"

namespace tsac {

// Parses and validates a config. Each override is a "key=value" string applied
// after the file contents. Throws ConfigError carrying the offending line.
SweepConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

SweepConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

}  // namespace tsac

#endif  // TSAC_CONFIG_HPP
