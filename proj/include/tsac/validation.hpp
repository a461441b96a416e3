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

// Built-in self checks run by `tsac validate`.

#ifndef TSAC_VALIDATION_HPP
#define TSAC_VALIDATION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tsac/quantization.hpp"

namespace tsac {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // measured values
};

struct ValidationOptions {
  std::array<double, 5> beta_table = kMmseDistortionTable;
  std::uint64_t seed = 2026;
  int channels = 100;
  int haar_draws = 1000;
};

// Tabulated beta_1..beta_5 within 1% of the sample-based Lloyd-Max oracle.
CheckResult check_lloyd_max_table(const ValidationOptions& options);

// Closed-form bound values at N_u = 8, b = 2.
CheckResult check_bound_values(const ValidationOptions& options);

// Quantized MI of the theorem combiner against its closed form on random channels.
CheckResult check_closed_form_consistency(const ValidationOptions& options);

// Random semi-unitary combiners never beat the general bound; SVD stays below its ceiling.
CheckResult check_bound_dominance(const ValidationOptions& options);

// Equal singular values: the theorem combiner attains the optimum and beats Haar draws.
CheckResult check_equal_lambda_optimality(const ValidationOptions& options);

std::vector<CheckResult> run_validation(const ValidationOptions& options = {});

}  // namespace tsac

#endif  // TSAC_VALIDATION_HPP
