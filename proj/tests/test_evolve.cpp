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

#include "oracle_support.hpp"
#include "tetrisim/evolve.hpp"

using tetrisim::Hamiltonian;
using tetrisim::State;

namespace {

double state_distance(const State& a, const State& b) {
  return (oracle::to_vector(a) - oracle::to_vector(b)).norm();
}

Hamiltonian single_x() {
  std::vector<tetrisim::HamiltonianTerm> terms;
  terms.push_back({tetrisim::PauliString::parse("X"),
                   tetrisim::CoefficientSchedule::constant(1.0)});
  return Hamiltonian(1, std::move(terms));
}

double energy(const Hamiltonian& h, const State& s, double t = 0.0) {
  double e = 0.0;
  for (const auto& term : h.terms()) {
    e += term.coefficient.value(t) * expectation(s, term.op);
  }
  return e;
}

}  // namespace

TEST_SUITE("evolve") {

TEST_CASE("t = 0 is the identity") {
  const auto h = tetrisim::build_ising2d(1, 3, 1.5, false);
  const auto s = State::basis_state(3, "010");
  CHECK(state_distance(exact_evolve(h, 0.0, s), s) == doctest::Approx(0.0));
  CHECK(state_distance(exact_evolve_td(h, 0.0, s), s) == doctest::Approx(0.0));
}

TEST_CASE("single-qubit X field has the analytic solution") {
  const auto h = single_x();
  const double t = 0.37;
  const auto psi = exact_evolve(h, t, State::basis_state(1, "0"));
  CHECK(std::abs(psi.amplitude(0) - std::complex<double>(std::cos(t), 0)) <
        1e-12);
  CHECK(std::abs(psi.amplitude(1) - std::complex<double>(0, std::sin(t))) <
        1e-12);
}

TEST_CASE("dense path matches the Pade oracle") {
  const auto h = tetrisim::build_ising2d(2, 2, 1.3, false);
  const auto s = State::basis_state(4, "0110");
  const auto psi = exact_evolve(h, 0.8, s);
  const auto expected =
      oracle::dense_evolve(oracle::dense_hamiltonian(h), 0.8, oracle::to_vector(s));
  CHECK((oracle::to_vector(psi) - expected).norm() < 1e-9);
}

TEST_CASE("Krylov path matches the dense path") {
  const auto h = tetrisim::build_ising2d(2, 4, 2.0, true);  // 8 qubits
  const auto s = State::all_zeros(8);
  const auto via_dense = exact_evolve(h, 1.0, s);
  const auto via_krylov = tetrisim::exact_evolve_krylov(h, 1.0, s);
  CHECK(state_distance(via_dense, via_krylov) < 1e-9);
  CHECK(std::abs(via_krylov.norm() - 1.0) < 1e-9);
}

TEST_CASE("energy is conserved under constant evolution") {
  const auto h = tetrisim::build_ising2d(1, 8, 1.3, true);
  const auto s = State::all_zeros(8);
  const double e0 = energy(h, s);
  const auto psi = exact_evolve(h, 0.9, s);
  CHECK(std::abs(energy(h, psi) - e0) < 1e-8);
}

TEST_CASE("time-dependent integrator agrees with exact_evolve for constants") {
  const auto h = tetrisim::build_ising2d(1, 4, 1.1, false);
  const auto s = State::basis_state(4, "0101");
  const auto a = exact_evolve(h, 0.7, s);
  const auto b = exact_evolve_td(h, 0.7, s);
  CHECK(state_distance(a, b) < 1e-8);
}

TEST_CASE("time-dependent integrator matches the RK4 oracle") {
  const auto h = tetrisim::build_ising2d_adiabatic(1, 6, 2.5, 1.0, false);
  const auto s = State::all_zeros(6);
  const auto psi = exact_evolve_td(h, 1.0, s);
  const auto expected = oracle::rk4_evolve(h, 1.0, oracle::to_vector(s), 4000);
  CHECK((oracle::to_vector(psi) - expected).norm() < 1e-8);
  CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
}

TEST_CASE("trotter is exact for commuting terms") {
  std::vector<tetrisim::HamiltonianTerm> terms;
  terms.push_back({tetrisim::PauliString::parse("ZZI"),
                   tetrisim::CoefficientSchedule::constant(-1.0)});
  terms.push_back({tetrisim::PauliString::parse("IZZ"),
                   tetrisim::CoefficientSchedule::constant(0.7)});
  terms.push_back({tetrisim::PauliString::parse("ZIZ"),
                   tetrisim::CoefficientSchedule::constant(0.3)});
  const Hamiltonian h(3, std::move(terms));
  State s = State::all_zeros(3);
  apply_pauli_rotation(s, tetrisim::PauliString::parse("XII"), 0.4);
  apply_pauli_rotation(s, tetrisim::PauliString::parse("IXI"), 0.9);
  const auto exact = exact_evolve(h, 1.0, s);
  const auto trotter = trotter_evolve(h, 1.0, 0.3, s);
  CHECK(state_distance(exact, trotter) < 1e-10);
}

TEST_CASE("trotter error scales linearly in the step") {
  const auto h = tetrisim::build_ising2d(1, 3, 1.5, false);
  const auto s = State::all_zeros(3);
  const auto exact = exact_evolve(h, 1.0, s);
  std::vector<double> log_tau;
  std::vector<double> log_err;
  for (double tau : {0.2, 0.1, 0.05, 0.025, 0.0125}) {
    const auto approx = trotter_evolve(h, 1.0, tau, s);
    log_tau.push_back(std::log(tau));
    log_err.push_back(std::log(state_distance(exact, approx)));
  }
  // least-squares slope
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < log_tau.size(); ++i) {
    mx += log_tau[i];
    my += log_err[i];
  }
  mx /= log_tau.size();
  my /= log_err.size();
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < log_tau.size(); ++i) {
    sxy += (log_tau[i] - mx) * (log_err[i] - my);
    sxx += (log_tau[i] - mx) * (log_tau[i] - mx);
  }
  const double slope = sxy / sxx;
  CHECK(slope == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("trotter handles a shortened final sweep") {
  const auto h = tetrisim::build_ising2d(1, 2, 0.9, false);
  const auto s = State::all_zeros(2);
  // t not a multiple of tau: total evolved time must still be exactly t.
  const auto a = trotter_evolve(h, 1.0, 0.3, s);
  const auto exact = exact_evolve(h, 1.0, s);
  CHECK(state_distance(a, exact) < 0.5);
  const auto commuting = tetrisim::build_ising2d(1, 3, 0.0, false);
  const auto b = trotter_evolve(commuting, 1.0, 0.3, State::all_zeros(3));
  CHECK(state_distance(b, exact_evolve(commuting, 1.0, State::all_zeros(3))) <
        1e-12);
}

TEST_CASE("input validation") {
  const auto h = tetrisim::build_ising2d(1, 2, 1.0, false);
  const auto td = tetrisim::build_ising2d_adiabatic(1, 2, 1.0, 1.0, false);
  const auto s = State::all_zeros(2);
  CHECK_THROWS_AS(exact_evolve(td, 0.5, s), std::invalid_argument);
  CHECK_THROWS_AS(trotter_evolve(h, 1.0, 0.0, s), std::invalid_argument);
  CHECK_THROWS_AS(trotter_evolve(h, 1.0, -0.1, s), std::invalid_argument);
  CHECK_THROWS_AS(exact_evolve_td(td, 1.5, s), std::domain_error);
  CHECK_THROWS_AS(exact_evolve(h, 1.0, State::all_zeros(3)),
                  std::invalid_argument);
}

}  // TEST_SUITE
