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

#include "tsac/quantization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <string>

#include "tsac/errors.hpp"

namespace tsac {

namespace {

double gaussian_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

// Upper tail P(X > x) of a standard Gaussian; accurate far into the tail.
double gaussian_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

// Inverse of gaussian_tail on (0, 1/2].
double gaussian_tail_inverse(double p) {
  double lo = 0.0;
  double hi = 40.0;
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gaussian_tail(mid) > p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ScalarQuantizer design_symmetric(int bits) {
  const int half = 1 << (bits - 1);

  // Start from the high-resolution point density p(x)^(1/3), i.e. quantiles of N(0, 3).
  std::vector<double> pos(half);
  for (int i = 0; i < half; ++i) {
    const double p = 0.5 - (i + 0.5) / (2.0 * half);
    pos[i] = std::sqrt(3.0) * gaussian_tail_inverse(p);
  }

  std::vector<double> edge(half + 1);
  std::vector<double> mass(half);
  constexpr int kMaxIterations = 1'000'000;
  int iteration = 0;
  for (;; ++iteration) {
    if (iteration == kMaxIterations)
      throw NumericError("Lloyd-Max design did not converge for " + std::to_string(bits) + " bits");
    edge[0] = 0.0;
    for (int i = 1; i < half; ++i) edge[i] = 0.5 * (pos[i - 1] + pos[i]);
    edge[half] = std::numeric_limits<double>::infinity();

    double change = 0.0;
    for (int i = 0; i < half; ++i) {
      const double upper_pdf = std::isinf(edge[i + 1]) ? 0.0 : gaussian_pdf(edge[i + 1]);
      mass[i] = gaussian_tail(edge[i]) - gaussian_tail(edge[i + 1]);
      const double centroid = (gaussian_pdf(edge[i]) - upper_pdf) / mass[i];
      change = std::max(change, std::abs(centroid - pos[i]));
      pos[i] = centroid;
    }
    if (change < 1e-14) break;
  }

  ScalarQuantizer q;
  q.bits = bits;
  double captured = 0.0;
  for (int i = 0; i < half; ++i) captured += 2.0 * mass[i] * pos[i] * pos[i];
  q.distortion = 1.0 - captured;

  q.levels.reserve(2 * half);
  for (int i = half - 1; i >= 0; --i) q.levels.push_back(-pos[i]);
  for (int i = 0; i < half; ++i) q.levels.push_back(pos[i]);
  for (std::size_t i = 0; i + 1 < q.levels.size(); ++i)
    q.thresholds.push_back(0.5 * (q.levels[i] + q.levels[i + 1]));
  return q;
}

}  // namespace

AdcModel make_adc_model(int bits, std::span<const double, 5> table) {
  if (bits < 1) throw DomainError("ADC needs at least one bit, got " + std::to_string(bits));
  AdcModel adc;
  adc.bits = bits;
  if (bits <= 5)
    adc.beta = table[static_cast<std::size_t>(bits - 1)];
  else
    adc.beta = std::numbers::pi * std::sqrt(3.0) / 2.0 * std::exp2(-2.0 * bits);
  adc.alpha = 1.0 - adc.beta;
  return adc;
}

AdcModel make_adc_model(int bits) { return make_adc_model(bits, kMmseDistortionTable); }

AdcModel adc_from_distortion(double beta) {
  if (!(beta >= 0.0 && beta < 1.0))
    throw DomainError("distortion factor must lie in [0, 1), got " + std::to_string(beta));
  return AdcModel{0, beta, 1.0 - beta};
}

AdcModel ideal_adc() { return AdcModel{0, 0.0, 1.0}; }

double ScalarQuantizer::quantize(double x, double scale) const {
  const auto it = std::upper_bound(thresholds.begin(), thresholds.end(), x / scale);
  return scale * levels[static_cast<std::size_t>(it - thresholds.begin())];
}

const ScalarQuantizer& lloyd_max_quantizer(int bits) {
  if (bits < 1 || bits > kMaxQuantizerBits)
    throw DomainError("scalar quantizer supports 1.." + std::to_string(kMaxQuantizerBits) +
                      " bits, got " + std::to_string(bits));
  static std::array<ScalarQuantizer, kMaxQuantizerBits> cache;
  static std::array<std::once_flag, kMaxQuantizerBits> built;
  const auto slot = static_cast<std::size_t>(bits - 1);
  std::call_once(built[slot], [&] { cache[slot] = design_symmetric(bits); });
  return cache[slot];
}

double lloyd_max_distortion(int bits, std::size_t sample_count, std::uint64_t seed) {
  if (bits < 1 || bits > 5)
    throw DomainError("Lloyd-Max oracle covers 1..5 bits, got " + std::to_string(bits));
  if (sample_count < 1'000'000)
    throw ContractError("Lloyd-Max oracle needs at least 1e6 samples");

  Rng rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> x(sample_count);
  for (auto& v : x) v = gauss(rng);
  std::sort(x.begin(), x.end());

  // Prefix sums make every Lloyd step O(levels * log n).
  std::vector<double> sum(sample_count + 1, 0.0);
  double energy = 0.0;
  for (std::size_t i = 0; i < sample_count; ++i) {
    sum[i + 1] = sum[i] + x[i];
    energy += x[i] * x[i];
  }

  const std::size_t n_levels = std::size_t{1} << bits;
  std::vector<double> level(n_levels);
  // Same p(x)^(1/3) starting point as the exact design.
  for (std::size_t i = 0; i < n_levels / 2; ++i) {
    const double p = 0.5 - (i + 0.5) / static_cast<double>(n_levels);
    level[n_levels / 2 + i] = std::sqrt(3.0) * gaussian_tail_inverse(p);
    level[n_levels / 2 - 1 - i] = -level[n_levels / 2 + i];
  }

  std::vector<std::size_t> split(n_levels + 1);
  auto partition = [&] {
    split[0] = 0;
    split[n_levels] = sample_count;
    for (std::size_t i = 1; i < n_levels; ++i) {
      const double t = 0.5 * (level[i - 1] + level[i]);
      split[i] = static_cast<std::size_t>(std::lower_bound(x.begin(), x.end(), t) - x.begin());
    }
  };

  constexpr int kMaxIterations = 10'000;
  bool converged = false;
  for (int iteration = 0; iteration < kMaxIterations && !converged; ++iteration) {
    partition();
    double change = 0.0;
    for (std::size_t i = 0; i < n_levels; ++i) {
      const std::size_t count = split[i + 1] - split[i];
      if (count == 0) continue;
      const double centroid = (sum[split[i + 1]] - sum[split[i]]) / static_cast<double>(count);
      change = std::max(change, std::abs(centroid - level[i]));
      level[i] = centroid;
    }
    converged = change < 1e-9;
  }
  if (!converged)
    throw NumericError("Lloyd-Max oracle did not converge within 1e4 iterations");

  partition();
  double error = 0.0;
  for (std::size_t i = 0; i < n_levels; ++i) {
    const double count = static_cast<double>(split[i + 1] - split[i]);
    const double cell_sum = sum[split[i + 1]] - sum[split[i]];
    double cell_energy = 0.0;
    for (std::size_t j = split[i]; j < split[i + 1]; ++j) cell_energy += x[j] * x[j];
    error += cell_energy - 2.0 * level[i] * cell_sum + count * level[i] * level[i];
  }
  return error / energy;
}

CVector scalar_quantize(const AdcModel& adc, const CVector& y) {
  const ScalarQuantizer& q = lloyd_max_quantizer(adc.bits);
  double scale = y.size() > 0 ? std::sqrt(y.squaredNorm() / (2.0 * static_cast<double>(y.size())))
                              : 1.0;
  if (scale == 0.0) scale = 1.0;

  CVector out(y.size());
  for (Eigen::Index i = 0; i < y.size(); ++i)
    out(i) = Complex(q.quantize(y(i).real(), scale), q.quantize(y(i).imag(), scale));
  return out;
}

CMatrix QuantNoiseCov::dense() const { return diagonal.cast<Complex>().asDiagonal(); }

QuantNoiseCov quant_noise_covariance(const AdcModel& adc, const CMatrix& w_rf, const CMatrix& h,
                                     double snr) {
  if (w_rf.rows() != h.rows())
    throw ContractError("combiner has " + std::to_string(w_rf.rows()) + " rows but channel has " +
                        std::to_string(h.rows()));
  if (!(snr >= 0.0)) throw DomainError("SNR must be nonnegative");

  const CMatrix projected = w_rf.adjoint() * h;
  QuantNoiseCov cov;
  cov.diagonal = adc.alpha * adc.beta *
                 (snr * projected.rowwise().squaredNorm() + w_rf.colwise().squaredNorm().transpose());
  return cov;
}

}  // namespace tsac
