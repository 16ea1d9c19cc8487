// Copyright 2026 The Tetrisim Authors
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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tetrisim/analytics.hpp"

using tetrisim::AngleMethod;
using tetrisim::optimal_angles;

TEST_SUITE("analytics") {

TEST_CASE("small-r optimum is sqrt(2r)") {
  const auto angles = optimal_angles({2e-3}, AngleMethod::kSmallR);
  CHECK(angles.tau(0) == doctest::Approx(0.0632456).epsilon(1e-5));
  CHECK(angles.tau(0) == doctest::Approx(std::sqrt(4e-3)).epsilon(1e-12));
}

TEST_CASE("zero rate falls back to the floor angle") {
  CHECK(optimal_angles({0.0}, AngleMethod::kSmallR).tau(0) ==
        doctest::Approx(tetrisim::kDefaultAngleFloor));
  CHECK(optimal_angles({0.0}, AngleMethod::kNumeric, 1e-3).tau(0) ==
        doctest::Approx(1e-3));
}

TEST_CASE("numeric minimizer agrees with sqrt(2r) to O(r)") {
  for (double r : {1e-4, 1e-3, 1e-2}) {
    const double numeric = optimal_angles({r}, AngleMethod::kNumeric).tau(0);
    CHECK(std::abs(numeric - std::sqrt(2.0 * r)) < r);
  }
}

TEST_CASE("numeric minimizer beats a dense grid scan") {
  const double r = 2e-3;
  const double numeric = optimal_angles({r}, AngleMethod::kNumeric).tau(0);
  const auto objective = [&](double tau) {
    return std::tan(0.5 * tau) + r / std::sin(tau);
  };
  double best_tau = 0.0;
  double best = 1e300;
  for (int i = 1; i <= 10000; ++i) {
    const double tau = i * (std::numbers::pi / 2.0) / 10000.0;
    if (objective(tau) < best) {
      best = objective(tau);
      best_tau = tau;
    }
  }
  CHECK(std::abs(numeric - best_tau) < 1e-4);  // grid resolution limited
  CHECK(objective(numeric) <= best + 1e-12);
}

TEST_CASE("per-term rates produce per-term angles") {
  const auto angles =
      optimal_angles({1e-3, 4e-3, 0.0}, AngleMethod::kSmallR, 1e-4);
  CHECK(angles.size() == 3);
  CHECK(angles.tau(0) == doctest::Approx(std::sqrt(2e-3)));
  CHECK(angles.tau(1) == doctest::Approx(std::sqrt(8e-3)));
  CHECK(angles.tau(2) == doctest::Approx(1e-4));
}

TEST_CASE("tetris shot count formula") {
  const auto h = tetrisim::build_ising2d(3, 4, 3.0, true);  // sum |c| = 60
  CHECK(shots_tetris(h, 1.0, 0.01, 0.0) == doctest::Approx(1e4));
  const double r = 2e-3;
  const double expected =
      std::exp(4.0 * std::sqrt(2.0 * r) * 60.0) / (0.01 * 0.01);
  CHECK(shots_tetris(h, 1.0, 0.01, r) == doctest::Approx(expected).epsilon(1e-12));
  // epsilon halved -> exactly four times the shots
  CHECK(shots_tetris(h, 1.0, 0.005, r) ==
        doctest::Approx(4.0 * shots_tetris(h, 1.0, 0.01, r)).epsilon(1e-12));
}

TEST_CASE("trotter shot count formula") {
  CHECK(tetrisim::shots_trotter(36, 1.0, 0.01, 1.0, 0.0) == doctest::Approx(1e4));
  const double m1 = tetrisim::shots_trotter(36, 1.0, 0.01, 1.0, 2e-3);
  const double expected = std::exp(2.0 * 1296.0 * 2e-3 / 0.01) / 1e-4;
  CHECK(m1 == doctest::Approx(expected).epsilon(1e-12));
  // halving epsilon doubles the exponent (small N keeps the value finite)
  const double s1 = tetrisim::shots_trotter(6, 1.0, 0.01, 1.0, 2e-3);
  const double s2 = tetrisim::shots_trotter(6, 1.0, 0.005, 1.0, 2e-3);
  CHECK(std::log(s2 * 0.005 * 0.005) ==
        doctest::Approx(2.0 * std::log(s1 * 0.01 * 0.01)).epsilon(1e-12));
}

TEST_CASE("crossover precision") {
  const auto h = tetrisim::build_ising2d(3, 4, 3.0, true);
  CHECK(tetrisim::crossover_epsilon(h, 1.0, 0.0, 2e-3) == 0.0);
  const double r = 2e-3;
  const double eps_star = tetrisim::crossover_epsilon(h, 1.0, 1.0, r);
  const double expected =
      36.0 * 36.0 * std::sqrt(r) / (2.0 * std::numbers::sqrt2 * 60.0);
  CHECK(eps_star == doctest::Approx(expected).epsilon(1e-12));
  // Below the crossover the tetris exponent is smaller; above it is larger.
  const auto exponents = [&](double eps) {
    const double tetris = 4.0 * std::sqrt(2.0 * r) * 60.0;
    const double trotter = 2.0 * 36.0 * 36.0 * r / eps;
    return std::make_pair(tetris, trotter);
  };
  const auto [te_below, tr_below] = exponents(0.9 * eps_star);
  CHECK(te_below < tr_below);
  const auto [te_above, tr_above] = exponents(1.1 * eps_star);
  CHECK(te_above > tr_above);
  // Monotone in C and r.
  CHECK(tetrisim::crossover_epsilon(h, 1.0, 2.0, r) > eps_star);
  CHECK(tetrisim::crossover_epsilon(h, 1.0, 1.0, 2.0 * r) > eps_star);
}

TEST_CASE("shot estimate bundles the formulas") {
  const auto h = tetrisim::build_ising2d(3, 4, 3.0, true);
  const auto est = tetrisim::shot_estimate(h, 1.0, 0.01, 1.0, 2e-3);
  CHECK(est.m_tetris == doctest::Approx(shots_tetris(h, 1.0, 0.01, 2e-3)));
  CHECK(est.m_trotter ==
        doctest::Approx(tetrisim::shots_trotter(36, 1.0, 0.01, 1.0, 2e-3)));
  CHECK(est.crossover ==
        doctest::Approx(tetrisim::crossover_epsilon(h, 1.0, 1.0, 2e-3)));
  CHECK(est.epsilon == 0.01);
  CHECK(est.trotter_error_coefficient == 1.0);
}

TEST_CASE("validation") {
  const auto h = tetrisim::build_ising2d(1, 2, 1.0, false);
  CHECK_THROWS_AS(tetrisim::shots_tetris(h, 1.0, 0.0, 1e-3),
                  std::invalid_argument);
  CHECK_THROWS_AS(tetrisim::shots_trotter(0, 1.0, 0.1, 1.0, 1e-3),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimal_angles({-1e-3}, AngleMethod::kSmallR),
                  std::invalid_argument);
  CHECK_THROWS_AS(optimal_angles({}, AngleMethod::kSmallR),
                  std::invalid_argument);
}

}  // TEST_SUITE
