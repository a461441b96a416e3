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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "tsac/channel_model.hpp"
#include "tsac/errors.hpp"

using namespace tsac;

TEST_CASE("steering vector closed forms") {
  const CVector a4 = steering_vector({4, 0.5}, 0.0);
  for (int m = 0; m < 4; ++m) CHECK(std::abs(a4(m) - Complex(0.5, 0.0)) < 1e-15);

  const CVector a2 = steering_vector({2, 0.5}, 1.0);
  CHECK(std::abs(a2(0) - Complex(1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
  CHECK(std::abs(a2(1) - Complex(-1.0 / std::sqrt(2.0), 0.0)) < 1e-15);
}

TEST_CASE("steering vectors on the 2/N grid are orthogonal") {
  const ArrayGeometry g{8, 0.5};
  const CVector base = steering_vector(g, 0.25);
  for (int k = 1; k <= 7; ++k) {
    double t = 0.25 + 2.0 / 8.0 * k;
    if (t > 1.0) t -= 2.0;  // same ARV, aliased back into [-1, 1]
    const Complex inner = base.dot(steering_vector(g, t));
    CHECK(std::abs(inner) < 1e-12);
    CHECK(std::abs(inner - oracle::steering_inner(8, 0.25, t)) < 1e-12);
  }
}

TEST_CASE("steering vector norm and inner products match the geometric series") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {1, 2, 7, 64, 257}) {
    for (int i = 0; i < 20; ++i) {
      const double t1 = u(rng);
      const double t2 = u(rng);
      const CVector a = steering_vector({n, 0.5}, t1);
      CHECK(std::abs(a.norm() - 1.0) < 1e-14);
      CHECK(std::abs(a.dot(steering_vector({n, 0.5}, t2)) - oracle::steering_inner(n, t1, t2)) < 1e-12);
    }
  }
}

TEST_CASE("steering vector rejects out-of-range angles") {
  CHECK_THROWS_AS(steering_vector({4, 0.5}, 1.0000001), DomainError);
  CHECK_THROWS_AS(steering_vector({4, 0.5}, -1.5), DomainError);
  CHECK_THROWS_AS(steering_vector({0, 0.5}, 0.0), ContractError);
  CHECK_THROWS_AS(steering_vector({4, 0.75}, 0.0), ContractError);
}

TEST_CASE("spatial angle mapping") {
  const ArrayGeometry g{4, 0.5};
  CHECK(spatial_from_physical(g, 0.0) == 0.0);
  CHECK(spatial_from_physical(g, std::numbers::pi / 2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(spatial_from_physical(g, std::numbers::pi / 6) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(spatial_from_physical({4, 0.25}, std::numbers::pi / 2) == doctest::Approx(0.5));
}

TEST_CASE("path count floor") {
  CHECK(path_count_from_draw(0) == 1);
  CHECK(path_count_from_draw(3) == 3);
  Rng rng(1);
  CHECK_THROWS_AS(draw_path_count(0.0, rng), DomainError);
}

TEST_CASE("path count sample mean matches lambda + exp(-lambda)") {
  Rng rng(2024);
  constexpr int kDraws = 1'000'000;
  double sum = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const int l = draw_path_count(3.0, rng);
    REQUIRE(l >= 1);
    sum += l;
  }
  const double expected = 3.0 + std::exp(-3.0);  // 3.0498
  CHECK(std::abs(sum / kDraws - expected) / expected < 0.01);
}

TEST_CASE("single on-axis path gives the all-ones column") {
  const ArrayGeometry g{16, 0.5};
  const ChannelMatrix ch = channel_from_paths(g, {PathSet{{Complex(1.0, 0.0)}, {0.0}}});
  for (int m = 0; m < 16; ++m) CHECK(std::abs(ch.h(m, 0) - Complex(1.0, 0.0)) < 1e-14);
  CHECK(ch.h.col(0).squaredNorm() == doctest::Approx(16.0));
}

TEST_CASE("generated channels reconstruct from their path sets") {
  Rng rng(5);
  const ChannelParams params{4, 3.0, {32, 0.5}};
  for (int t = 0; t < 50; ++t) {
    const ChannelMatrix ch = generate_channel(params, rng);
    REQUIRE(ch.paths.size() == 4);
    for (int k = 0; k < 4; ++k) {
      const PathSet& p = ch.paths[static_cast<std::size_t>(k)];
      REQUIRE(p.count() >= 1);
      REQUIRE(p.aoas.size() == p.gains.size());
      for (double phi : p.aoas) CHECK(std::abs(phi) <= std::numbers::pi / 2);
      const CVector rebuilt = channel_column(params.geometry, p);
      CHECK((rebuilt - ch.h.col(k)).norm() <= 1e-12 * ch.h.col(k).norm());
    }
  }
}

TEST_CASE("channel generation is deterministic per seed") {
  const ChannelParams params{3, 2.5, {24, 0.5}};
  Rng a(77);
  Rng b(77);
  Rng c(78);
  const ChannelMatrix x = generate_channel(params, a);
  const ChannelMatrix y = generate_channel(params, b);
  const ChannelMatrix z = generate_channel(params, c);
  CHECK(x.h == y.h);
  CHECK(x.h != z.h);
}

TEST_CASE("average column energy is N_r") {
  Rng rng(99);
  const int n_r = 32;
  const ChannelParams params{1, 3.0, {n_r, 0.5}};
  constexpr int kTrials = 20'000;
  double sum = 0.0;
  for (int t = 0; t < kTrials; ++t) sum += generate_channel(params, rng).h.col(0).squaredNorm() / n_r;
  const double mean = sum / kTrials;
  CHECK(mean >= 0.97);
  CHECK(mean <= 1.03);
}

TEST_CASE("path gains are unit-variance circular Gaussians") {
  Rng rng(3);
  const ChannelParams params{1, 4.0, {4, 0.5}};
  double re2 = 0.0, im2 = 0.0, cross = 0.0;
  std::size_t n = 0;
  for (int t = 0; t < 20'000; ++t) {
    const ChannelMatrix ch = generate_channel(params, rng);
    for (const Complex& g : ch.paths[0].gains) {
      re2 += g.real() * g.real();
      im2 += g.imag() * g.imag();
      cross += g.real() * g.imag();
      ++n;
    }
  }
  CHECK(re2 / n == doctest::Approx(0.5).epsilon(0.02));
  CHECK(im2 / n == doctest::Approx(0.5).epsilon(0.02));
  CHECK(std::abs(cross / n) < 0.01);
}
