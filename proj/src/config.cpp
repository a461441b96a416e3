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

#include "tsac/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "tsac/errors.hpp"

namespace tsac {

namespace {

struct Entry {
  std::string value;
  int line = 0;  // 0 for command-line overrides
};

const std::vector<std::string_view> kKnownKeys = {
    "n_r",    "n_u",        "n_rf",   "kappa", "n_r_list", "bits",
    "snr_db", "mean_paths", "trials", "seed",  "designs",  "codebook_size"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> items;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    items.push_back(trim(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return items;
}

[[noreturn]] void fail(const std::string& key, const Entry& e, const std::string& what) {
  if (e.line > 0) throw ConfigError(key + ": " + what, e.line);
  throw ConfigError("override " + key + "=" + e.value + ": " + what);
}

template <typename T>
T parse_number(const std::string& key, const Entry& e, std::string_view token) {
  T out{};
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  if (token.empty() || ec != std::errc() || ptr != end)
    fail(key, e, "cannot parse '" + std::string(token) + "' as a number");
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(out)) fail(key, e, "value must be finite");
  }
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const Entry& e) {
  std::vector<T> out;
  for (std::string_view item : split_list(e.value)) out.push_back(parse_number<T>(key, e, item));
  return out;
}

int parse_positive(const std::string& key, const Entry& e) {
  const int v = parse_number<int>(key, e, e.value);
  if (v < 1) fail(key, e, "must be at least 1");
  return v;
}

void collect(std::map<std::string, Entry>& entries, std::string_view raw, int line) {
  const auto hash = raw.find('#');
  const std::string_view body = trim(raw.substr(0, hash));
  if (body.empty()) return;
  const auto eq = body.find('=');
  const std::string where = line > 0 ? "" : "override '" + std::string(raw) + "': ";
  if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value'", line);
  const std::string key(trim(body.substr(0, eq)));
  const std::string value(trim(body.substr(eq + 1)));
  if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end())
    throw ConfigError(where + "unknown key '" + key + "'", line);
  if (value.empty()) throw ConfigError(where + "missing value for '" + key + "'", line);
  if (line > 0 && entries.count(key))
    throw ConfigError("duplicate key '" + key + "' (first on line " +
                          std::to_string(entries[key].line) + ")",
                      line);
  entries[key] = Entry{value, line};
}

}  // namespace

SweepConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  std::map<std::string, Entry> entries;
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const std::string_view raw =
        text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    collect(entries, raw, ++line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  for (const std::string& o : overrides) collect(entries, o, 0);

  auto has = [&](const char* k) { return entries.count(k) != 0; };
  SweepConfig cfg;

  if (has("n_r") && has("n_r_list")) fail("n_r_list", entries["n_r_list"], "conflicts with n_r");
  if (has("kappa") && has("n_rf")) fail("n_rf", entries["n_rf"], "conflicts with kappa");

  if (has("n_r")) cfg.n_r_list = {parse_positive("n_r", entries["n_r"])};
  if (has("n_r_list")) {
    cfg.n_r_list = parse_list<int>("n_r_list", entries["n_r_list"]);
    for (int v : cfg.n_r_list)
      if (v < 1) fail("n_r_list", entries["n_r_list"], "array sizes must be positive");
  }
  if (has("n_rf")) {
    cfg.n_rf_list = parse_list<int>("n_rf", entries["n_rf"]);
    for (int v : cfg.n_rf_list)
      if (v < 1) fail("n_rf", entries["n_rf"], "RF chain counts must be positive");
  }
  if (has("kappa")) {
    const double k = parse_number<double>("kappa", entries["kappa"], entries["kappa"].value);
    if (!(k > 0.0 && k <= 1.0)) fail("kappa", entries["kappa"], "must lie in (0, 1]");
    cfg.kappa = k;
  }
  if (has("n_u")) cfg.n_u = parse_positive("n_u", entries["n_u"]);
  if (has("bits")) cfg.bits = parse_positive("bits", entries["bits"]);
  if (has("snr_db")) cfg.snr_db_list = parse_list<double>("snr_db", entries["snr_db"]);
  if (has("mean_paths")) {
    cfg.mean_paths = parse_number<double>("mean_paths", entries["mean_paths"], entries["mean_paths"].value);
    if (!(cfg.mean_paths > 0.0)) fail("mean_paths", entries["mean_paths"], "must be positive");
  }
  if (has("trials")) cfg.trials = parse_positive("trials", entries["trials"]);
  if (has("seed")) cfg.master_seed = parse_number<std::uint64_t>("seed", entries["seed"], entries["seed"].value);
  if (has("codebook_size")) cfg.codebook_size = parse_positive("codebook_size", entries["codebook_size"]);
  if (has("designs")) {
    cfg.designs.clear();
    for (std::string_view tag : split_list(entries["designs"].value)) {
      const auto d = parse_design(tag);
      if (!d) fail("designs", entries["designs"], "unknown design tag '" + std::string(tag) + "'");
      if (std::find(cfg.designs.begin(), cfg.designs.end(), *d) != cfg.designs.end())
        fail("designs", entries["designs"], "design '" + std::string(tag) + "' listed twice");
      cfg.designs.push_back(*d);
    }
  }

  if (cfg.n_r_list.empty()) throw ConfigError("missing array size: set n_r or n_r_list");
  if (!cfg.kappa && cfg.n_rf_list.empty()) throw ConfigError("missing RF chains: set n_rf or kappa");

  // Attribute the users-vs-RF-chains constraint to a line when possible.
  int min_rf = INT32_MAX;
  for (const GridPoint& p : cfg.grid()) min_rf = std::min(min_rf, p.n_rf);
  if (cfg.n_u > min_rf) {
    const char* key = has("n_u") ? "n_u" : (has("kappa") ? "kappa" : "n_rf");
    fail(key, entries[key],
         "n_u = " + std::to_string(cfg.n_u) + " exceeds the smallest N_RF = " + std::to_string(min_rf));
  }

  cfg.validate();
  return cfg;
}

SweepConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), overrides);
}

}  // namespace tsac
