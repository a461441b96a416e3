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

#include "tsac/metrics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tsac/errors.hpp"

namespace tsac {

void MiContext::validate() const {
  if (!(snr >= 0.0) || !std::isfinite(snr)) throw DomainError("SNR must be finite and nonnegative");
  if (kappa && !(*kappa > 0.0 && *kappa <= 1.0))
    throw DomainError("kappa must lie in (0, 1], got " + std::to_string(*kappa));
}

SingularProfile singular_profile(const CMatrix& h, int n_rf) {
  SingularProfile p;
  p.n_r = static_cast<int>(h.rows());
  p.n_u = static_cast<int>(h.cols());
  p.n_rf = n_rf;
  if (h.size() == 0) return p;
  Eigen::JacobiSVD<CMatrix> svd(h);
  const Eigen::VectorXd& s = svd.singularValues();
  p.values.reserve(static_cast<std::size_t>(s.size()));
  for (Eigen::Index i = 0; i < s.size(); ++i) p.values.push_back(s(i) * s(i));
  return p;
}

double mutual_information_from_projection(const CMatrix& gram, const CMatrix& projected,
                                          const MiContext& ctx) {
  ctx.validate();
  const double alpha = ctx.adc.alpha;
  const double beta = ctx.adc.beta;
  const double rho = ctx.snr;
  if (gram.rows() != projected.rows() || gram.cols() != gram.rows())
    throw ContractError("W^H W and W^H H disagree on the RF chain count");

  const Eigen::VectorXd rqq =
      alpha * beta * (rho * projected.rowwise().squaredNorm() + gram.diagonal().real());
  CMatrix d = alpha * alpha * gram;
  d.diagonal() += rqq.cast<Complex>();

  Eigen::LLT<CMatrix> noise(d);
  if (noise.info() != Eigen::Success)
    throw NumericError("quantized noise covariance is not positive definite");

  const CMatrix whitened = noise.matrixL().solve(projected);
  CMatrix m = rho * alpha * alpha * (whitened.adjoint() * whitened);
  m.diagonal().array() += 1.0;
  Eigen::LLT<CMatrix> signal(m);
  if (signal.info() != Eigen::Success)
    throw NumericError("MI determinant factor is not positive definite");

  double log_det = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) log_det += std::log2(signal.matrixLLT()(i, i).real());
  const double mi = 2.0 * log_det;
  if (!std::isfinite(mi)) throw NumericError("mutual information is not finite");
  return std::max(mi, 0.0);
}

double mutual_information(const CMatrix& h, const CMatrix& w_rf, const MiContext& ctx) {
  if (w_rf.rows() != h.rows())
    throw ContractError("combiner has " + std::to_string(w_rf.rows()) + " rows but channel has " +
                        std::to_string(h.rows()));
  return mutual_information_from_projection(w_rf.adjoint() * w_rf, w_rf.adjoint() * h, ctx);
}

double mutual_information(const CMatrix& h, const Combiner& combiner, const MiContext& ctx) {
  return mutual_information(h, combiner.effective, ctx);
}

double rate_theorem_form(const SingularProfile& profile, const MiContext& ctx) {
  ctx.validate();
  if (profile.n_r < 1 || profile.n_rf < 1) throw ContractError("profile needs N_r, N_RF >= 1");
  const double n_r = profile.n_r;
  const double n_rf = profile.n_rf;
  const double kappa = ctx.kappa.value_or(n_rf / n_r);
  const double alpha = ctx.adc.alpha;
  const double rho = ctx.snr;

  double total = 0.0;
  for (double l : profile.values) total += l;
  const double denom = kappa + (1.0 - alpha) * rho * total / n_r;

  double rate = 0.0;
  for (double l : profile.values) rate += std::log2(1.0 + alpha * rho * n_rf * l / n_r / denom);
  return rate;
}

double optimal_mi_equal(int n_u, int n_rf, double lambda, const MiContext& ctx) {
  ctx.validate();
  if (lambda < 0.0) throw DomainError("lambda must be nonnegative");
  if (ctx.snr == 0.0 || lambda == 0.0) return 0.0;
  const double alpha = ctx.adc.alpha;
  return n_u * std::log2(1.0 + alpha * lambda * n_rf /
                                   (lambda * n_u * (1.0 - alpha) + n_rf / ctx.snr));
}

double svd_upper_bound(int n_u, const AdcModel& adc) {
  if (adc.is_ideal()) throw DomainError("SVD saturation bound diverges for an ideal ADC");
  return n_u * std::log2(1.0 + adc.alpha / (1.0 - adc.alpha));
}

double general_upper_bound(int m, int n_rf, const AdcModel& adc) {
  if (m < 1) throw DomainError("bound needs m >= 1");
  if (adc.is_ideal()) throw DomainError("upper bound diverges for an ideal ADC");
  return m * std::log2(1.0 + adc.alpha * n_rf / (adc.beta * m));
}

double scaling_slope(const std::map<int, double>& mi_at_nrf) {
  if (mi_at_nrf.size() < 3) throw ContractError("scaling slope needs at least three N_RF points");
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& [n_rf, mi] : mi_at_nrf) {
    mean_x += std::log2(static_cast<double>(n_rf));
    mean_y += mi;
  }
  const double n = static_cast<double>(mi_at_nrf.size());
  mean_x /= n;
  mean_y /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [n_rf, mi] : mi_at_nrf) {
    const double dx = std::log2(static_cast<double>(n_rf)) - mean_x;
    sxy += dx * (mi - mean_y);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

CMatrix random_semi_unitary(int n_r, int n_cols, Rng& rng) {
  if (n_cols < 1 || n_cols > n_r) throw ContractError("need 1 <= columns <= rows");
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  CMatrix z(n_r, n_cols);
  for (Eigen::Index c = 0; c < z.cols(); ++c)
    for (Eigen::Index r = 0; r < z.rows(); ++r) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(r, c) = Complex(re, im);
    }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n_r, n_cols);
  // Fix the phase ambiguity of QR so the result is Haar distributed.
  const CMatrix& r = qr.matrixQR();
  for (Eigen::Index i = 0; i < n_cols; ++i) {
    const double mag = std::abs(r(i, i));
    if (mag > 0.0) q.col(i) *= r(i, i) / mag;
  }
  return q;
}

}  // namespace tsac
