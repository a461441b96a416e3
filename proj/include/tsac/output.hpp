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

// Persistence formats: sweep CSV and plain-text complex matrix dumps.

#ifndef TSAC_OUTPUT_HPP
#define TSAC_OUTPUT_HPP

#include <iosfwd>
#include <string>

#include "tsac/channel_model.hpp"
#include "tsac/simulation.hpp"

namespace tsac {

inline constexpr const char* kCsvHeader =
    "design,n_r,n_rf,snr_db,bits,trials,mi_mean,mi_std,mi_sem";

// Header plus one row per cell sorted by (design tag, n_r, n_rf, snr_db);
// floating-point fields use 6 significant digits.
std::string format_csv(const SweepResult& result);

// Writes format_csv(result). Throws std::runtime_error naming the path on I/O failure.
void emit_csv(const SweepResult& result, const std::string& path);

// "rows cols" header, then one line per row of "re+imj" tokens.
void write_matrix(std::ostream& out, const CMatrix& m);
CMatrix read_matrix(std::istream& in);

}  // namespace tsac

#endif  // TSAC_OUTPUT_HPP
