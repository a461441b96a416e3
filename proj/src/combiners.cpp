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

#include "tsac/combiners.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "tsac/errors.hpp"
#include "tsac/metrics.hpp"

namespace tsac {

std::string_view design_tag(Design design) {
  switch (design) {
    case Design::ArvTsac: return "ARV_TSAC";
    case Design::Arv: return "ARV";
    case Design::SvdDft: return "SVD_DFT";
    case Design::Svd: return "SVD";
    case Design::GreedyMi: return "GREEDY_MI";
  }
  return "UNKNOWN";
}

std::optional<Design> parse_design(std::string_view tag) {
  for (Design d : kAllDesigns)
    if (design_tag(d) == tag) return d;
  return std::nullopt;
}

bool uses_codebook(Design design) {
  return design == Design::ArvTsac || design == Design::Arv || design == Design::GreedyMi;
}

AngleCodebook make_codebook(const ArrayGeometry& geometry, int size) {
  if (size < 1) throw ContractError("codebook needs at least one angle");
  AngleCodebook codebook;
  codebook.spatial_angles.reserve(size);
  codebook.vectors.resize(geometry.n_antennas, size);
  for (int n = 1; n <= size; ++n) {
    const double theta = 2.0 * n / size - 1.0;
    codebook.spatial_angles.push_back(theta);
    codebook.vectors.col(n - 1) = steering_vector(geometry, theta);
  }
  return codebook;
}

CMatrix dft_matrix(int n) {
  if (n < 1) throw ContractError("DFT size must be positive");
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix f(n, n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      // Reduce p*q mod n first so the phase stays exact for large n.
      const int k = (p * q) % n;
      f(p, q) = std::polar(scale, -2.0 * std::numbers::pi * k / n);
    }
  return f;
}

namespace {

void normalize_phase(Eigen::Ref<CVector> v) {
  Eigen::Index peak = 0;
  v.cwiseAbs().maxCoeff(&peak);
  const double mag = std::abs(v(peak));
  if (mag > 0.0) v *= std::conj(v(peak)) / mag;
}

void check_nrf(const CMatrix& h, int n_rf) {
  if (n_rf < 1 || n_rf > h.rows())
    throw ContractError("need 1 <= N_RF <= N_r, got N_RF = " + std::to_string(n_rf) +
                        ", N_r = " + std::to_string(h.rows()));
}

Combiner assemble(CMatrix w1, CMatrix w2, Design design) {
  Combiner c;
  c.effective = w1 * w2;
  c.w1 = std::move(w1);
  c.w2 = std::move(w2);
  c.design = design;
  return c;
}

}  // namespace

CMatrix left_singular_basis(const CMatrix& h, int n_cols) {
  check_nrf(h, n_cols);
  const Eigen::Index n_r = h.rows();
  CMatrix basis(n_r, n_cols);
  Eigen::Index filled = 0;

  if (h.cols() > 0) {
    Eigen::JacobiSVD<CMatrix> svd(h, Eigen::ComputeThinU);
    const CMatrix& u = svd.matrixU();  // columns already sorted by descending singular value
    for (; filled < std::min<Eigen::Index>(u.cols(), n_cols); ++filled) {
      basis.col(filled) = u.col(filled);
      normalize_phase(basis.col(filled));
    }
  }

  // Deterministic completion: canonical vectors with the current span removed.
  for (Eigen::Index e = 0; e < n_r && filled < n_cols; ++e) {
    CVector v = CVector::Unit(n_r, e);
    for (int pass = 0; pass < 2; ++pass) {
      const auto span = basis.leftCols(filled);
      v -= span * (span.adjoint() * v);
    }
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    basis.col(filled++) = v / norm;
  }
  return basis;
}

Combiner svd_combiner(const CMatrix& h, int n_rf) {
  return assemble(left_singular_basis(h, n_rf), CMatrix::Identity(n_rf, n_rf), Design::Svd);
}

Combiner svd_dft_combiner(const CMatrix& h, int n_rf) {
  return assemble(left_singular_basis(h, n_rf), dft_matrix(n_rf), Design::SvdDft);
}

Combiner theorem_combiner(const CMatrix& h, int n_rf, int n_u) {
  if (n_u < 1 || n_u > n_rf)
    throw ContractError("theorem combiner needs 1 <= N_u <= N_RF");
  check_nrf(h, n_rf);
  // The left singular vectors past index N_u are orthogonal to U_{1:N_u}, so
  // taking the first N_RF of them realizes [U_{1:N_u} | U_perp].
  return assemble(left_singular_basis(h, n_rf), dft_matrix(n_rf), Design::SvdDft);
}

GainAggregator::GainAggregator(const CMatrix& h, const AngleCodebook& codebook)
    : codebook_(codebook), residual_(h), available_(codebook.spatial_angles.size(), true) {
  if (codebook.vectors.rows() != h.rows())
    throw ContractError("codebook vectors have " + std::to_string(codebook.vectors.rows()) +
                        " entries but channel has " + std::to_string(h.rows()) + " antennas");
}

int GainAggregator::step() {
  const Eigen::VectorXd gains = (codebook_.vectors.adjoint() * residual_).rowwise().squaredNorm();
  int best = -1;
  double best_gain = -std::numeric_limits<double>::infinity();
  for (int n = 0; n < codebook_.size(); ++n) {
    if (available_[static_cast<std::size_t>(n)] && gains(n) > best_gain) {
      best = n;
      best_gain = gains(n);
    }
  }
  if (best < 0) throw ContractError("codebook exhausted");

  const auto a = codebook_.vectors.col(best);
  residual_ -= a * (a.adjoint() * residual_);
  available_[static_cast<std::size_t>(best)] = false;
  selected_.push_back(best);
  return best;
}

namespace {

Combiner arv_stage_one(const CMatrix& h, int n_rf, const AngleCodebook& codebook, Design design) {
  if (n_rf < 1 || n_rf > codebook.size())
    throw ContractError("N_RF = " + std::to_string(n_rf) + " exceeds codebook size " +
                        std::to_string(codebook.size()));
  GainAggregator aggregator(h, codebook);
  CMatrix w1(h.rows(), n_rf);
  std::vector<double> angles;
  angles.reserve(n_rf);
  for (int i = 0; i < n_rf; ++i) {
    const int idx = aggregator.step();
    w1.col(i) = codebook.vectors.col(idx);
    angles.push_back(codebook.spatial_angles[static_cast<std::size_t>(idx)]);
  }
  CMatrix w2 = design == Design::ArvTsac ? dft_matrix(n_rf) : CMatrix::Identity(n_rf, n_rf);
  Combiner c = assemble(std::move(w1), std::move(w2), design);
  c.selected_angles = std::move(angles);
  return c;
}

}  // namespace

Combiner arv_tsac(const CMatrix& h, int n_rf, const AngleCodebook& codebook) {
  return arv_stage_one(h, n_rf, codebook, Design::ArvTsac);
}

Combiner arv_only(const CMatrix& h, int n_rf, const AngleCodebook& codebook) {
  return arv_stage_one(h, n_rf, codebook, Design::Arv);
}

Combiner greedy_mi(const CMatrix& h, int n_rf, const AngleCodebook& codebook, double snr,
                   const AdcModel& adc) {
  if (n_rf < 1 || n_rf > codebook.size())
    throw ContractError("N_RF = " + std::to_string(n_rf) + " exceeds codebook size " +
                        std::to_string(codebook.size()));
  if (codebook.vectors.rows() != h.rows())
    throw ContractError("codebook and channel disagree on the antenna count");

  const MiContext ctx{snr, adc, std::nullopt};
  const CMatrix gram = codebook.vectors.adjoint() * codebook.vectors;
  const CMatrix projected = codebook.vectors.adjoint() * h;

  std::vector<int> chosen;
  std::vector<bool> available(static_cast<std::size_t>(codebook.size()), true);
  for (int i = 0; i < n_rf; ++i) {
    const auto k = static_cast<Eigen::Index>(chosen.size());
    CMatrix sub_gram(k + 1, k + 1);
    CMatrix sub_proj(k + 1, h.cols());
    for (Eigen::Index r = 0; r < k; ++r) {
      sub_proj.row(r) = projected.row(chosen[static_cast<std::size_t>(r)]);
      for (Eigen::Index c = 0; c < k; ++c)
        sub_gram(r, c) = gram(chosen[static_cast<std::size_t>(r)], chosen[static_cast<std::size_t>(c)]);
    }

    int best = -1;
    double best_mi = -std::numeric_limits<double>::infinity();
    for (int n = 0; n < codebook.size(); ++n) {
      if (!available[static_cast<std::size_t>(n)]) continue;
      for (Eigen::Index r = 0; r < k; ++r) {
        sub_gram(r, k) = gram(chosen[static_cast<std::size_t>(r)], n);
        sub_gram(k, r) = gram(n, chosen[static_cast<std::size_t>(r)]);
      }
      sub_gram(k, k) = gram(n, n);
      sub_proj.row(k) = projected.row(n);
      const double mi = mutual_information_from_projection(sub_gram, sub_proj, ctx);
      if (mi > best_mi) {
        best = n;
        best_mi = mi;
      }
    }
    chosen.push_back(best);
    available[static_cast<std::size_t>(best)] = false;
  }

  CMatrix w1(h.rows(), n_rf);
  std::vector<double> angles;
  for (int i = 0; i < n_rf; ++i) {
    w1.col(i) = codebook.vectors.col(chosen[static_cast<std::size_t>(i)]);
    angles.push_back(codebook.spatial_angles[static_cast<std::size_t>(chosen[static_cast<std::size_t>(i)])]);
  }
  Combiner c = assemble(std::move(w1), CMatrix::Identity(n_rf, n_rf), Design::GreedyMi);
  c.selected_angles = std::move(angles);
  return c;
}

}  // namespace tsac
