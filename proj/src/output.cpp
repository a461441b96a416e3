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

#include "tsac/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace tsac {

namespace {

std::string sig6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

std::string exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string format_csv(const SweepResult& result) {
  std::vector<const SweepRow*> rows;
  rows.reserve(result.rows.size());
  for (const SweepRow& r : result.rows) rows.push_back(&r);
  std::stable_sort(rows.begin(), rows.end(), [](const SweepRow* a, const SweepRow* b) {
    return std::make_tuple(design_tag(a->design), a->n_r, a->n_rf, a->snr_db) <
           std::make_tuple(design_tag(b->design), b->n_r, b->n_rf, b->snr_db);
  });

  std::string out = kCsvHeader;
  out += '\n';
  for (const SweepRow* r : rows) {
    out += design_tag(r->design);
    out += ',' + std::to_string(r->n_r) + ',' + std::to_string(r->n_rf) + ',' + sig6(r->snr_db) +
           ',' + std::to_string(r->bits) + ',' + std::to_string(r->trials) + ',' + sig6(r->mi_mean) +
           ',' + sig6(r->mi_std) + ',' + sig6(r->mi_sem) + '\n';
  }
  return out;
}

void emit_csv(const SweepResult& result, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << format_csv(result);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void write_matrix(std::ostream& out, const CMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const Complex z = m(r, c);
      if (c > 0) out << ' ';
      out << exact(z.real()) << (std::signbit(z.imag()) ? '-' : '+') << exact(std::abs(z.imag()))
          << 'j';
    }
    out << '\n';
  }
}

CMatrix read_matrix(std::istream& in) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw std::runtime_error("matrix dump: bad 'rows cols' header");
  CMatrix m(rows, cols);
  std::string token;
  for (Eigen::Index r = 0; r < rows; ++r)
    for (Eigen::Index c = 0; c < cols; ++c) {
      if (!(in >> token) || token.size() < 4 || token.back() != 'j')
        throw std::runtime_error("matrix dump: bad entry '" + token + "'");
      // The real/imaginary split is the last sign that does not follow an exponent marker.
      std::size_t split = std::string::npos;
      for (std::size_t i = token.size() - 1; i > 0; --i)
        if ((token[i] == '+' || token[i] == '-') && token[i - 1] != 'e' && token[i - 1] != 'E') {
          split = i;
          break;
        }
      if (split == std::string::npos) throw std::runtime_error("matrix dump: bad entry '" + token + "'");
      char* end = nullptr;
      const std::string re_text = token.substr(0, split);
      const std::string im_text = token.substr(split, token.size() - split - 1);
      const double re = std::strtod(re_text.c_str(), &end);
      if (*end != '\0') throw std::runtime_error("matrix dump: bad entry '" + token + "'");
      const double im = std::strtod(im_text.c_str(), &end);
      if (*end != '\0') throw std::runtime_error("matrix dump: bad entry '" + token + "'");
      m(r, c) = Complex(re, im);
    }
  return m;
}

}  // namespace tsac
