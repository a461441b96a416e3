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

// Additive quantization noise model (AQNM) for b-bit ADCs.
//
// Q(y) ~= alpha_b y + q with q uncorrelated with y, where beta_b is the
// normalized MSE of a b-bit MMSE scalar quantizer on a Gaussian input and
// alpha_b = 1 - beta_b. An empirical Lloyd-Max quantizer is provided to check
// the analytic model against real quantization.

#ifndef TSAC_QUANTIZATION_HPP
#define TSAC_QUANTIZATION_HPP

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tsac/channel_model.hpp"

namespace tsac {

struct AdcModel {
  int bits = 0;  // 0 for models not tied to a bit count (ideal or custom distortion)
  double beta = 0.0;
  double alpha = 1.0;

  bool is_ideal() const { return beta == 0.0; }
};

// Normalized MMSE distortion of the 1..5 bit Lloyd-Max quantizer for a Gaussian source.
inline constexpr std::array<double, 5> kMmseDistortionTable = {0.3634, 0.1175, 0.03454, 0.009497,
                                                               0.002499};

// b <= 5 uses the table, b > 5 uses (pi sqrt(3) / 2) 2^(-2b). Throws DomainError for b < 1.
AdcModel make_adc_model(int bits);

// As make_adc_model but reads the b <= 5 constants from `table`.
AdcModel make_adc_model(int bits, std::span<const double, 5> table);

// Model with an explicit distortion factor, beta in [0, 1).
AdcModel adc_from_distortion(double beta);

// Infinite-resolution limit: beta = 0, alpha = 1.
AdcModel ideal_adc();

// Symmetric Lloyd-Max quantizer for a unit-variance real Gaussian.
struct ScalarQuantizer {
  int bits = 0;
  std::vector<double> levels;      // ascending, 2^bits entries
  std::vector<double> thresholds;  // ascending, 2^bits - 1 decision boundaries
  double distortion = 0.0;         // E|x - Q(x)|^2 for unit-variance x

  // Nearest level to x / scale, rescaled. Inputs on a boundary go to the upper level.
  double quantize(double x, double scale = 1.0) const;
};

inline constexpr int kMaxQuantizerBits = 7;

// Exact-integral Lloyd-Max design, cached per bit count. Throws DomainError
// outside [1, kMaxQuantizerBits].
const ScalarQuantizer& lloyd_max_quantizer(int bits);

// Sample-based Lloyd-Max oracle: runs the Lloyd iteration on `sample_count`
// standard Gaussian draws until no level moves by more than 1e-9 and returns the
// empirical normalized distortion. Requires bits in [1, 5] and sample_count >= 1e6.
// Throws NumericError after 1e4 iterations without convergence.
double lloyd_max_distortion(int bits, std::size_t sample_count, std::uint64_t seed = 0x5eed);

// Element-wise quantization of real and imaginary parts with the Lloyd-Max
// codebook for adc.bits, scaled to the per-component RMS of y.
CVector scalar_quantize(const AdcModel& adc, const CVector& y);

struct QuantNoiseCov {
  Eigen::VectorXd diagonal;

  CMatrix dense() const;
};

// R_qq = alpha beta diag{rho W^H H H^H W + W^H W}.
QuantNoiseCov quant_noise_covariance(const AdcModel& adc, const CMatrix& w_rf, const CMatrix& h,
                                     double snr);

}  // namespace tsac

#endif  // TSAC_QUANTIZATION_HPP
