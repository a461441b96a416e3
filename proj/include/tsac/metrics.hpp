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

// Mutual information of the quantized receiver and its closed-form rates and bounds.
// All values are in bits.

#ifndef TSAC_METRICS_HPP
#define TSAC_METRICS_HPP

#include <map>
#include <optional>

#include <Eigen/Dense>

#include "tsac/combiners.hpp"
#include "tsac/quantization.hpp"

namespace tsac {

struct MiContext {
  double snr = 1.0;  // linear rho
  AdcModel adc;
  std::optional<double> kappa;  // N_RF / N_r

  void validate() const;
};

// Eigenvalues of H H^H in descending order (at most N_u of them nonzero).
struct SingularProfile {
  std::vector<double> values;
  int n_r = 0;
  int n_u = 0;
  int n_rf = 0;
};

SingularProfile singular_profile(const CMatrix& h, int n_rf);

// log2 |I + rho alpha^2 D^-1 W^H H H^H W| with D = alpha^2 W^H W + R_qq.
//
// Evaluated as log2 |I_{N_u} + rho alpha^2 (L^-1 G)^H (L^-1 G)| where G = W^H H and
// L L^H = D, so both factorizations are Hermitian positive definite. Throws
// NumericError if D is not positive definite.
double mutual_information(const CMatrix& h, const CMatrix& w_rf, const MiContext& ctx);
double mutual_information(const CMatrix& h, const Combiner& combiner, const MiContext& ctx);

// Same objective from precomputed W^H W and W^H H.
double mutual_information_from_projection(const CMatrix& gram, const CMatrix& projected,
                                          const MiContext& ctx);

// sum_k log2(1 + alpha rho N_RF lambda_k / N_r / (kappa + (1 - alpha) rho sum_i lambda_i / N_r)).
// kappa defaults to n_rf / n_r when the context does not carry one.
double rate_theorem_form(const SingularProfile& profile, const MiContext& ctx);

// N_u log2(1 + alpha lambda N_RF / (lambda N_u (1 - alpha) + N_RF / rho)).
double optimal_mi_equal(int n_u, int n_rf, double lambda, const MiContext& ctx);

// N_u log2(1 + alpha / (1 - alpha)); throws DomainError for an ideal ADC.
double svd_upper_bound(int n_u, const AdcModel& adc);

// m log2(1 + alpha N_RF / (beta m)); throws DomainError for an ideal ADC or m < 1.
double general_upper_bound(int m, int n_rf, const AdcModel& adc);

// Least-squares slope of MI against log2 N_RF. Needs at least three points.
double scaling_slope(const std::map<int, double>& mi_at_nrf);

// Haar-distributed N_r x n_cols semi-unitary matrix.
CMatrix random_semi_unitary(int n_r, int n_cols, Rng& rng);

}  // namespace tsac

#endif  // TSAC_METRICS_HPP
