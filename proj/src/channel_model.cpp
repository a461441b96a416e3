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

#include "tsac/channel_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tsac/errors.hpp"

namespace tsac {

void ArrayGeometry::validate() const {
  if (n_antennas < 1)
    throw ContractError("array needs at least one antenna, got " + std::to_string(n_antennas));
  if (!(spacing_ratio > 0.0 && spacing_ratio <= 0.5))
    throw ContractError("antenna spacing ratio must lie in (0, 1/2], got " +
                        std::to_string(spacing_ratio));
}

CVector steering_vector(const ArrayGeometry& geometry, double spatial_angle) {
  geometry.validate();
  if (!(std::abs(spatial_angle) <= 1.0))
    throw DomainError("spatial angle must lie in [-1, 1], got " + std::to_string(spatial_angle));

  const int n = geometry.n_antennas;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CVector a(n);
  for (int m = 0; m < n; ++m)
    a(m) = std::polar(scale, -std::numbers::pi * m * spatial_angle);
  return a;
}

double spatial_from_physical(const ArrayGeometry& geometry, double physical_angle) {
  return 2.0 * geometry.spacing_ratio * std::sin(physical_angle);
}

int path_count_from_draw(int poisson_draw) { return std::max(1, poisson_draw); }

int draw_path_count(double mean_paths, Rng& rng) {
  if (!(mean_paths > 0.0))
    throw DomainError("mean path count must be positive, got " + std::to_string(mean_paths));
  std::poisson_distribution<int> poisson(mean_paths);
  return path_count_from_draw(poisson(rng));
}

CVector channel_column(const ArrayGeometry& geometry, const PathSet& paths) {
  if (paths.count() < 1 || paths.aoas.size() != paths.gains.size())
    throw ContractError("path set needs matching, non-empty gain and AoA lists");

  CVector column = CVector::Zero(geometry.n_antennas);
  for (int l = 0; l < paths.count(); ++l) {
    // Clamp guards sin(+-pi/2) landing a few ulps outside [-1, 1].
    const double theta = std::clamp(spatial_from_physical(geometry, paths.aoas[l]), -1.0, 1.0);
    column += paths.gains[l] * steering_vector(geometry, theta);
  }
  column *= std::sqrt(static_cast<double>(geometry.n_antennas) / paths.count());
  return column;
}

ChannelMatrix channel_from_paths(const ArrayGeometry& geometry, std::vector<PathSet> paths) {
  geometry.validate();
  ChannelMatrix channel;
  channel.h.resize(geometry.n_antennas, static_cast<Eigen::Index>(paths.size()));
  for (std::size_t k = 0; k < paths.size(); ++k)
    channel.h.col(static_cast<Eigen::Index>(k)) = channel_column(geometry, paths[k]);
  channel.paths = std::move(paths);
  return channel;
}

ChannelMatrix generate_channel(const ChannelParams& params, Rng& rng) {
  params.geometry.validate();
  if (params.n_users < 1)
    throw ContractError("channel needs at least one user");

  std::normal_distribution<double> half_variance(0.0, std::sqrt(0.5));
  std::uniform_real_distribution<double> aoa(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);

  std::vector<PathSet> paths(static_cast<std::size_t>(params.n_users));
  for (auto& user : paths) {
    const int count = draw_path_count(params.mean_paths, rng);
    user.gains.reserve(count);
    user.aoas.reserve(count);
    for (int l = 0; l < count; ++l) {
      const double re = half_variance(rng);
      const double im = half_variance(rng);
      user.gains.emplace_back(re, im);
      user.aoas.push_back(aoa(rng));
    }
  }
  return channel_from_paths(params.geometry, std::move(paths));
}

}  // namespace tsac
