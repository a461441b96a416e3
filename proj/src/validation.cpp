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

#include "tsac/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "tsac/combiners.hpp"
#include "tsac/metrics.hpp"
#include "tsac/simulation.hpp"

namespace tsac {

namespace {

std::string printf_string(const char* fmt, auto... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// H = U diag(sqrt(lambda)) V^H with Haar U (n_r x n_u) and V (n_u x n_u).
CMatrix equal_lambda_channel(int n_r, int n_u, double lambda, Rng& rng) {
  const CMatrix u = random_semi_unitary(n_r, n_u, rng);
  const CMatrix v = random_semi_unitary(n_u, n_u, rng);
  return std::sqrt(lambda) * u * v.adjoint();
}

}  // namespace

CheckResult check_lloyd_max_table(const ValidationOptions& options) {
  CheckResult r{"lloyd_max_beta_table", true, ""};
  for (int b = 1; b <= 5; ++b) {
    const double oracle = lloyd_max_distortion(b, 1'000'000, options.seed + b);
    const double table = options.beta_table[static_cast<std::size_t>(b - 1)];
    const double rel = std::abs(table - oracle) / oracle;
    r.passed = r.passed && rel < 0.01;
    r.detail += printf_string("b=%d table=%.6g oracle=%.6g rel=%.2e; ", b, table, oracle, rel);
  }
  const double one_bit = lloyd_max_distortion(1, 1'000'000, options.seed + 1);
  const double analytic = 1.0 - 2.0 / std::numbers::pi;
  r.detail += printf_string("b=1 vs 1-2/pi rel=%.2e", std::abs(one_bit - analytic) / analytic);
  return r;
}

CheckResult check_bound_values(const ValidationOptions& options) {
  const AdcModel adc = make_adc_model(2, options.beta_table);
  const double svd = svd_upper_bound(8, adc);
  const double general = general_upper_bound(8, 64, adc);
  const bool ok = std::abs(svd - 24.72) <= 0.01 && std::abs(general - 47.46) <= 0.01;
  return {"closed_form_bounds", ok,
          printf_string("svd_ub(8,b=2)=%.4f general_ub(8,64,b=2)=%.4f", svd, general)};
}

CheckResult check_closed_form_consistency(const ValidationOptions& options) {
  constexpr int kNr = 16;
  constexpr int kNrf = 8;
  constexpr int kNu = 2;
  Rng rng(options.seed);
  double worst = 0.0;
  for (int t = 0; t < options.channels; ++t) {
    const ChannelMatrix ch = generate_channel({kNu, 3.0, ArrayGeometry{kNr, 0.5}}, rng);
    const Combiner c = theorem_combiner(ch.h, kNrf, kNu);
    const SingularProfile profile = singular_profile(ch.h, kNrf);
    for (int b : {1, 2, 3})
      for (double rho : {0.1, 1.0, 10.0}) {
        const MiContext ctx{rho, make_adc_model(b), static_cast<double>(kNrf) / kNr};
        worst = std::max(worst, std::abs(mutual_information(ch.h, c, ctx) -
                                         rate_theorem_form(profile, ctx)));
      }
  }
  return {"mi_closed_form_consistency", worst < 1e-8,
          printf_string("max |MI - closed form| = %.3e over %d channels", worst, options.channels)};
}

CheckResult check_bound_dominance(const ValidationOptions& options) {
  constexpr int kNr = 32;
  constexpr int kNrf = 8;
  constexpr int kNu = 4;
  Rng rng(options.seed + 17);
  double worst_general = -INFINITY;  // max of MI - bound, must stay <= 0
  double worst_svd = -INFINITY;
  for (int t = 0; t < options.channels; ++t) {
    const ChannelMatrix ch = generate_channel({kNu, 3.0, ArrayGeometry{kNr, 0.5}}, rng);
    const CMatrix w = random_semi_unitary(kNr, kNrf, rng);
    const Combiner svd = svd_combiner(ch.h, kNrf);
    for (int b : {1, 2, 3})
      for (double rho : {0.1, 1.0, 10.0, 1000.0}) {
        const MiContext ctx{rho, make_adc_model(b), std::nullopt};
        const double general = general_upper_bound(kNu, kNrf, ctx.adc);
        worst_general = std::max({worst_general, mutual_information(ch.h, w, ctx) - general,
                                  mutual_information(ch.h, svd, ctx) - general});
        worst_svd = std::max(worst_svd, mutual_information(ch.h, svd, ctx) - svd_upper_bound(kNu, ctx.adc));
      }
  }
  return {"bound_dominance", worst_general <= 0.0 && worst_svd < 0.0,
          printf_string("max(MI - general_ub) = %.4f, max(MI_svd - svd_ub) = %.4f", worst_general,
                        worst_svd)};
}

CheckResult check_equal_lambda_optimality(const ValidationOptions& options) {
  constexpr int kNr = 16;
  constexpr int kNu = 2;
  Rng rng(options.seed + 29);
  const MiContext ctx{1.0, make_adc_model(2), std::nullopt};
  double worst_closed = 0.0;
  double worst_margin = INFINITY;  // min of MI(theorem) - MI(W)
  for (double lambda : {1.0, 4.0})
    for (int n_rf : {4, 8}) {
      const CMatrix h = equal_lambda_channel(kNr, kNu, lambda, rng);
      const double best = mutual_information(h, theorem_combiner(h, n_rf, kNu), ctx);
      worst_closed = std::max(worst_closed, std::abs(best - optimal_mi_equal(kNu, n_rf, lambda, ctx)));
      for (int i = 0; i < options.haar_draws; ++i)
        worst_margin = std::min(worst_margin, best - mutual_information(h, random_semi_unitary(kNr, n_rf, rng), ctx));
    }
  return {"equal_lambda_optimality", worst_closed < 1e-8 && worst_margin >= -1e-9,
          printf_string("max |MI - C_opt| = %.3e, min MI(theorem) - MI(W) = %.4f", worst_closed,
                        worst_margin)};
}

std::vector<CheckResult> run_validation(const ValidationOptions& options) {
  return {check_lloyd_max_table(options), check_bound_values(options),
          check_closed_form_consistency(options), check_bound_dominance(options),
          check_equal_lambda_optimality(options)};
}

}  // namespace tsac
