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

// Analog combiner designs for a hybrid receiver with N_RF RF chains.
//
// Every design returns a two-stage pair (w1, w2) with effective combiner
// W = w1 * w2. The first stage aggregates channel gain into N_RF dimensions; the
// optional second stage is a constant-modulus unitary (a normalized DFT) that
// spreads the aggregated gain evenly over all RF chains so that no single ADC
// carries most of the signal power.
//
//   ARV_TSAC   greedy ARV selection with projection deflation, w2 = DFT
//   ARV        same selection, w2 = I
//   SVD_DFT    leading left singular vectors, w2 = DFT (not constant modulus)
//   SVD        leading left singular vectors, w2 = I
//   GREEDY_MI  greedy ARV selection maximizing the quantized MI, w2 = I

#ifndef TSAC_COMBINERS_HPP
#define TSAC_COMBINERS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsac/channel_model.hpp"
#include "tsac/quantization.hpp"

namespace tsac {

enum class Design { ArvTsac, Arv, SvdDft, Svd, GreedyMi };

inline constexpr std::array<Design, 5> kAllDesigns = {Design::ArvTsac, Design::Arv, Design::SvdDft,
                                                      Design::Svd, Design::GreedyMi};

std::string_view design_tag(Design design);
std::optional<Design> parse_design(std::string_view tag);

// True for designs that pick their first stage from an ARV codebook.
bool uses_codebook(Design design);

// Evenly spaced spatial angles theta_n = 2n/|V| - 1, n = 1..|V|, with their
// steering vectors as columns. Orthonormal when |V| = N_r and d/lambda = 1/2.
struct AngleCodebook {
  std::vector<double> spatial_angles;
  CMatrix vectors;  // N_r x |V|

  int size() const { return static_cast<int>(spatial_angles.size()); }
};

AngleCodebook make_codebook(const ArrayGeometry& geometry, int size);

struct Combiner {
  CMatrix w1;         // N_r x N_RF
  CMatrix w2;         // N_RF x N_RF, unitary
  CMatrix effective;  // w1 * w2
  Design design = Design::Svd;
  std::vector<double> selected_angles;  // codebook designs only, in selection order

  int n_rf() const { return static_cast<int>(effective.cols()); }
};

// Entry (p, q) = exp(-j 2 pi p q / n) / sqrt(n).
CMatrix dft_matrix(int n);

// Orthonormal N_r x n_cols basis: left singular vectors of h by descending
// singular value, each phase-rotated so its largest-magnitude entry is real
// positive, completed with canonical basis vectors projected off the span.
CMatrix left_singular_basis(const CMatrix& h, int n_cols);

Combiner svd_combiner(const CMatrix& h, int n_rf);
Combiner svd_dft_combiner(const CMatrix& h, int n_rf);

// [U_{1:n_u} | U_perp] * DFT where U_perp holds the next n_rf - n_u left
// singular vectors. Requires n_u <= n_rf <= N_r.
Combiner theorem_combiner(const CMatrix& h, int n_rf, int n_u);

// Greedy maximum channel gain aggregation over an ARV codebook. Each step picks
// the remaining codeword with the largest captured gain ||a^H H_rm||^2 (ties go
// to the lowest codebook index) and projects it out of the residual channel.
class GainAggregator {
 public:
  GainAggregator(const CMatrix& h, const AngleCodebook& codebook);

  // Selects one codeword and deflates the residual. Returns its codebook index.
  // Throws ContractError once the codebook is exhausted.
  int step();

  const CMatrix& residual() const { return residual_; }
  const std::vector<int>& selected() const { return selected_; }

 private:
  const AngleCodebook& codebook_;
  CMatrix residual_;
  std::vector<bool> available_;
  std::vector<int> selected_;
};

// Both throw ContractError when n_rf exceeds the codebook size.
Combiner arv_tsac(const CMatrix& h, int n_rf, const AngleCodebook& codebook);
Combiner arv_only(const CMatrix& h, int n_rf, const AngleCodebook& codebook);

// One-stage greedy selection: each step adds the codeword that maximizes the
// quantized MI of the partial combiner (w2 = I).
Combiner greedy_mi(const CMatrix& h, int n_rf, const AngleCodebook& codebook, double snr,
                   const AdcModel& adc);

}  // namespace tsac

#endif  // TSAC_COMBINERS_HPP
