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

// Geometric narrowband mmWave channel for a receive ULA.
//
// Column k of H is sqrt(N_r / L_k) * sum_l g_{l,k} a(phi_{l,k}); the pathloss is
// assumed compensated by uplink power control so the SNR rho is the only power
// parameter. Path gains are CN(0,1) and AoAs uniform on [-pi/2, pi/2].

#ifndef TSAC_CHANNEL_MODEL_HPP
#define TSAC_CHANNEL_MODEL_HPP

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace tsac {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Rng = std::mt19937_64;

struct ArrayGeometry {
  int n_antennas = 1;
  double spacing_ratio = 0.5;  // d / lambda

  // Throws ContractError when n_antennas < 1 or spacing_ratio is outside (0, 1/2].
  void validate() const;
};

struct PathSet {
  std::vector<Complex> gains;
  std::vector<double> aoas;  // physical angles, radians

  int count() const { return static_cast<int>(gains.size()); }
};

struct ChannelMatrix {
  CMatrix h;                  // N_r x N_u
  std::vector<PathSet> paths;  // one entry per user (column)

  int n_antennas() const { return static_cast<int>(h.rows()); }
  int n_users() const { return static_cast<int>(h.cols()); }
};

struct ChannelParams {
  int n_users = 1;
  double mean_paths = 3.0;
  ArrayGeometry geometry;
};

// Unit-norm ULA response, element m = exp(-j*pi*m*theta) / sqrt(N_r).
// Throws DomainError for |spatial_angle| > 1.
CVector steering_vector(const ArrayGeometry& geometry, double spatial_angle);

// theta = 2 (d/lambda) sin(phi).
double spatial_from_physical(const ArrayGeometry& geometry, double physical_angle);

// max(1, poisson_draw).
int path_count_from_draw(int poisson_draw);

// L = max(1, Poisson(mean_paths)). Throws DomainError for mean_paths <= 0.
int draw_path_count(double mean_paths, Rng& rng);

// sqrt(N_r / L) * sum_l g_l a(2 (d/lambda) sin phi_l).
CVector channel_column(const ArrayGeometry& geometry, const PathSet& paths);

// Assembles H from explicit per-user paths.
ChannelMatrix channel_from_paths(const ArrayGeometry& geometry, std::vector<PathSet> paths);

ChannelMatrix generate_channel(const ChannelParams& params, Rng& rng);

}  // namespace tsac

#endif  // TSAC_CHANNEL_MODEL_HPP
