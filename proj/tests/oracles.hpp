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

// Test-only reference computations. None of these call into the code path they
// are used to check.

#ifndef TSAC_TESTS_ORACLES_HPP
#define TSAC_TESTS_ORACLES_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <Eigen/Dense>

namespace oracle {

using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Quantized MI by the textbook route: explicit inverse of D and an LU determinant.
inline double direct_mi(const CMatrix& h, const CMatrix& w, double alpha, double beta, double rho) {
  const CMatrix whh = w.adjoint() * h * h.adjoint() * w;
  const CMatrix gram = w.adjoint() * w;
  CMatrix rqq = CMatrix::Zero(w.cols(), w.cols());
  for (Eigen::Index i = 0; i < w.cols(); ++i)
    rqq(i, i) = alpha * beta * (rho * whh(i, i).real() + gram(i, i).real());
  const CMatrix d = alpha * alpha * gram + rqq;
  const CMatrix m = CMatrix::Identity(w.cols(), w.cols()) +
                    rho * alpha * alpha * d.fullPivLu().inverse() * whh;
  return std::log2(std::abs(m.fullPivLu().determinant()));
}

// a(t1)^H a(t2) for an n-element half-wavelength ULA by the geometric series.
inline Complex steering_inner(int n, double t1, double t2) {
  const double delta = t2 - t1;
  const Complex r = std::polar(1.0, -std::numbers::pi * delta);
  if (std::abs(r - 1.0) < 1e-15) return 1.0;
  return (1.0 - std::pow(r, n)) / (static_cast<double>(n) * (1.0 - r));
}

inline double semi_unitary_error(const CMatrix& w) {
  return (w.adjoint() * w - CMatrix::Identity(w.cols(), w.cols())).cwiseAbs().maxCoeff();
}

// Orthonormal columns by classical Gram-Schmidt on complex Gaussians.
inline CMatrix gram_schmidt_random(int rows, int cols, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  CMatrix q(rows, cols);
  for (int c = 0; c < cols; ++c) {
    Eigen::VectorXcd v(rows);
    for (int r = 0; r < rows; ++r) v(r) = Complex(g(rng), g(rng));
    for (int pass = 0; pass < 2; ++pass)
      for (int k = 0; k < c; ++k) v -= q.col(k) * q.col(k).dot(v);
    q.col(c) = v.normalized();
  }
  return q;
}

// H = U sqrt(lambda) V^H: every nonzero eigenvalue of H H^H equals lambda.
inline CMatrix equal_lambda_channel(int n_r, int n_u, double lambda, std::mt19937_64& rng) {
  return std::sqrt(lambda) * gram_schmidt_random(n_r, n_u, rng) *
         gram_schmidt_random(n_u, n_u, rng).adjoint();
}

}  // namespace oracle

#endif  // TSAC_TESTS_ORACLES_HPP
