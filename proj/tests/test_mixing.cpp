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

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "oracle_support.hpp"
#include "tetrisim/mixing.hpp"

using tetrisim::mixing_params;
using Complex = std::complex<double>;

namespace {

// |(1-p) + p e^{i s tau} - lambda e^{i s tau'}| on eigenvalue branch s = +-1.
double branch_error(const tetrisim::MixingParams& m, double sign) {
  const Complex lhs = (1.0 - m.p) + m.p * std::polar(1.0, sign * m.tau);
  const Complex rhs = m.lambda * std::polar(1.0, sign * m.tau_prime);
  return std::abs(lhs - rhs);
}

}  // namespace

TEST_SUITE("mixing") {

TEST_CASE("T-gate pair gives p = 1/2 and lambda = cos(pi/8)") {
  const auto m = mixing_params(std::numbers::pi / 8.0, std::numbers::pi / 4.0);
  CHECK(std::abs(m.p - 0.5) < 1e-15);
  CHECK(std::abs(m.lambda - std::cos(std::numbers::pi / 8.0)) < 1e-15);
}

TEST_CASE("degenerate angles") {
  const auto same = mixing_params(0.3, 0.3);
  CHECK(same.p == 1.0);
  CHECK(same.lambda == 1.0);
  const auto zero = mixing_params(0.0, 0.3);
  CHECK(zero.p == 0.0);
  CHECK(zero.lambda == 1.0);
  const auto both_half_pi =
      mixing_params(std::numbers::pi / 2.0, std::numbers::pi / 2.0);
  CHECK(both_half_pi.p == 1.0);
}

TEST_CASE("scalar identity holds on both eigenvalue branches") {
  tetrisim::RngStream rng(21);
  for (int trial = 0; trial < 10000; ++trial) {
    double tau = rng.uniform(1e-6, std::numbers::pi / 2.0);
    double tau_prime = rng.uniform(0.0, tau);
    if (trial % 2 == 1) {  // negative-angle case
      tau = -tau;
      tau_prime = -tau_prime;
    }
    const auto m = mixing_params(tau_prime, tau);
    CHECK(m.p >= 0.0);
    CHECK(m.p <= 1.0 + 1e-15);
    CHECK(m.lambda > 0.0);
    CHECK(m.lambda <= 1.0 + 1e-15);
    CHECK(branch_error(m, 1.0) < 1e-14);
    CHECK(branch_error(m, -1.0) < 1e-14);
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(mixing_params(0.5, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(mixing_params(-0.2, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(mixing_params(0.2, 2.0), std::invalid_argument);
}

TEST_CASE("subset identity: degenerate cases") {
  using tetrisim::PauliString;
  const auto initial = tetrisim::State::basis_state(2, "00");
  const auto obs = PauliString::parse("ZI");

  const auto [lhs0, rhs0] =
      tetrisim::subset_identity_check({}, 0.2, obs, initial, 0.7);
  CHECK(std::abs(lhs0 - rhs0) < 1e-15);

  // tau' = tau means p = 1: only the empty deletion subsets contribute.
  const std::vector<PauliString> gates = {PauliString::parse("XI"),
                                          PauliString::parse("ZZ")};
  const auto [lhs1, rhs1] =
      tetrisim::subset_identity_check(gates, 0.4, obs, initial, 0.4);
  CHECK(std::abs(lhs1 - rhs1) < 1e-14);
}

TEST_CASE("subset identity on random circuits") {
  tetrisim::RngStream rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<tetrisim::PauliString> gates;
    for (int g = 0; g < 4; ++g) {
      auto letters = oracle::random_letters(rng, 3);
      if (tetrisim::PauliString::parse(letters).is_identity()) letters[0] = 'X';
      gates.push_back(tetrisim::PauliString::parse(letters));
    }
    auto obs_letters = oracle::random_letters(rng, 3);
    if (tetrisim::PauliString::parse(obs_letters).is_identity()) {
      obs_letters[1] = 'Z';
    }
    tetrisim::State initial = tetrisim::State::all_zeros(3);
    for (std::size_t i = 0; i < initial.dim(); ++i) {
      initial.amplitude(i) =
          Complex(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    }
    const double norm = initial.norm();
    for (std::size_t i = 0; i < initial.dim(); ++i) {
      initial.amplitude(i) /= norm;
    }
    const auto [lhs, rhs] = tetrisim::subset_identity_check(
        gates, 0.2, tetrisim::PauliString::parse(obs_letters), initial, 0.7);
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("subset identity caps the gate count") {
  const std::vector<tetrisim::PauliString> gates(6,
                                                 tetrisim::PauliString::parse("X"));
  CHECK_THROWS_AS(
      tetrisim::subset_identity_check(gates, 0.1, tetrisim::PauliString::parse("Z"),
                                      tetrisim::State::all_zeros(1), 0.2),
      std::invalid_argument);
}

}  // TEST_SUITE
