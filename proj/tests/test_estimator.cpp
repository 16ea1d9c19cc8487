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
#include "tetrisim/estimator.hpp"
#include "tetrisim/evolve.hpp"
#include "tetrisim/fermion.hpp"

using tetrisim::AngleAssignment;
using tetrisim::CoefficientSchedule;
using tetrisim::EstimatorOptions;
using tetrisim::Hamiltonian;
using tetrisim::HamiltonianTerm;
using tetrisim::NoiseModel;
using tetrisim::PauliString;
using tetrisim::ratio_R;
using tetrisim::State;

namespace {

Hamiltonian single_term(const std::string& letters, double c) {
  std::vector<HamiltonianTerm> terms;
  terms.push_back(
      {PauliString::parse(letters), CoefficientSchedule::constant(c)});
  return Hamiltonian(PauliString::parse(letters).n_qubits(), std::move(terms));
}

}  // namespace

TEST_SUITE("estimator") {

TEST_CASE("t = 0 reproduces the initial expectation exactly") {
  const auto h = single_term("XI", 1.0);
  const auto initial = State::basis_state(2, "00");
  EstimatorOptions options;
  options.n_samples = 50;
  options.master_seed = 1;
  const auto result =
      estimate_expectation(h, PauliString::parse("ZI"), 0.0, initial,
                           AngleAssignment::uniform(1, 0.3), options);
  CHECK(result.mean.real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(result.stderr_re == 0.0);
  CHECK(result.report.lambda_att == 1.0);
  CHECK(result.mean_gates == 0.0);
}

TEST_CASE("single-qubit X field matches cos(2t)") {
  const auto h = single_term("X", 1.0);
  const auto initial = State::basis_state(1, "0");
  EstimatorOptions options;
  options.n_samples = 100000;
  options.master_seed = 2;
  options.n_threads = 2;
  const double t = 0.4;
  const auto result =
      estimate_expectation(h, PauliString::parse("Z"), t, initial,
                           AngleAssignment::uniform(1, 0.5), options);
  const double expected = std::cos(2.0 * t);
  CHECK(result.stderr_re > 0.0);
  CHECK(std::abs(result.mean.real() - expected) < 3.0 * result.stderr_re);
  // Hermitian observable: imaginary part is consistent with zero (this
  // instance keeps samples exactly real, so allow the degenerate case).
  CHECK(std::abs(result.mean.imag()) <= 3.0 * result.stderr_im + 1e-15);
}

TEST_CASE("results are bit-identical across thread counts") {
  const auto h = tetrisim::build_ising2d(1, 3, 1.2, false);
  const auto initial = State::all_zeros(3);
  const auto angles = AngleAssignment::uniform(h.n_terms(), 0.4);
  EstimatorOptions a;
  a.n_samples = 500;
  a.master_seed = 3;
  a.n_threads = 1;
  EstimatorOptions b = a;
  b.n_threads = 8;
  const auto ra =
      estimate_expectation(h, PauliString::parse("ZII"), 0.6, initial, angles, a);
  const auto rb =
      estimate_expectation(h, PauliString::parse("ZII"), 0.6, initial, angles, b);
  CHECK(ra.mean.real() == rb.mean.real());
  CHECK(ra.mean.imag() == rb.mean.imag());
  CHECK(ra.stderr_re == rb.stderr_re);
  CHECK(ra.mean_gates == rb.mean_gates);
}

TEST_CASE("stderr shrinks as one over sqrt(n)") {
  const auto h = single_term("X", 1.0);
  const auto initial = State::basis_state(1, "0");
  const auto angles = AngleAssignment::uniform(1, 0.5);
  std::vector<double> log_n;
  std::vector<double> log_se;
  for (std::size_t n : {1000u, 4000u, 16000u, 64000u}) {
    EstimatorOptions options;
    options.n_samples = n;
    options.master_seed = 4;
    const auto result = estimate_expectation(h, PauliString::parse("Z"), 0.4,
                                             initial, angles, options);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_se.push_back(std::log(result.stderr_re));
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    mx += log_n[i];
    my += log_se[i];
  }
  mx /= log_n.size();
  my /= log_se.size();
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    sxy += (log_n[i] - mx) * (log_se[i] - my);
    sxx += (log_n[i] - mx) * (log_n[i] - mx);
  }
  CHECK(sxy / sxx == doctest::Approx(-0.5).epsilon(0.1));
}

TEST_CASE("raw mean carries the lambda_att attenuation") {
  const auto h = single_term("X", 1.0);
  const auto initial = State::basis_state(1, "0");
  EstimatorOptions options;
  options.n_samples = 100000;
  options.master_seed = 5;
  const double t = 0.4;
  const auto result =
      estimate_expectation(h, PauliString::parse("Z"), t, initial,
                           AngleAssignment::uniform(1, 0.7), options);
  const double lambda = result.report.lambda_att;
  CHECK(lambda == doctest::Approx(std::exp(-2.0 * t * std::tan(0.35))));
  const double raw_mean = result.mean.real() * lambda;
  const double raw_se = result.stderr_re * lambda;
  CHECK(std::abs(raw_mean - lambda * std::cos(2.0 * t)) < 3.0 * raw_se);
}

TEST_CASE("time-dependent estimation against the ODE oracle") {
  const auto h = tetrisim::build_ising2d_adiabatic(1, 3, 1.8, 0.6, false);
  const auto initial = State::all_zeros(3);
  const auto psi = exact_evolve_td(h, 0.6, initial);
  const double expected = [&] {
    double e = 0.0;
    for (int q = 0; q < 3; ++q) {
      e += expectation(psi, PauliString::single(3, q, 'Z')) / 3.0;
    }
    return e;
  }();
  tetrisim::ObservableSum obs;
  for (int q = 0; q < 3; ++q) {
    obs.push_back({1.0 / 3.0, PauliString::single(3, q, 'Z')});
  }
  EstimatorOptions options;
  options.n_samples = 40000;
  options.master_seed = 6;
  options.n_threads = 2;
  const auto result = estimate_observable_sum(
      h, obs, 0.6, initial, AngleAssignment::uniform(h.n_terms(), 0.4), options);
  CHECK(std::abs(result.mean.real() - expected) < 3.0 * result.stderr_re);
}

TEST_CASE("background variant agrees and shrinks the variance") {
  const auto h = tetrisim::build_ising2d(1, 4, 1.2, false);
  const auto initial = State::all_zeros(4);
  const auto angles = AngleAssignment::uniform(h.n_terms(), 0.35);
  std::vector<std::size_t> zz;
  for (std::size_t n = 0; n < h.n_terms(); ++n) {
    if (h.term(n).op.weight() == 2) zz.push_back(n);
  }
  tetrisim::ObservableSum obs;
  for (int q = 0; q < 4; ++q) {
    obs.push_back({0.25, PauliString::single(4, q, 'Z')});
  }
  EstimatorOptions plain;
  plain.n_samples = 20000;
  plain.master_seed = 7;
  plain.n_threads = 2;
  EstimatorOptions with_bg = plain;
  with_bg.background = &zz;
  const double t = 0.7;
  const auto r_plain = estimate_observable_sum(h, obs, t, initial, angles, plain);
  const auto r_bg = estimate_observable_sum(h, obs, t, initial, angles, with_bg);
  const double sigma =
      std::sqrt(r_plain.stderr_re * r_plain.stderr_re +
                r_bg.stderr_re * r_bg.stderr_re);
  CHECK(std::abs(r_plain.mean.real() - r_bg.mean.real()) < 3.0 * sigma);
  CHECK(r_bg.report.lambda_att > r_plain.report.lambda_att);
  CHECK(r_bg.stderr_re < r_plain.stderr_re);
  CHECK(r_bg.mean_gates < r_plain.mean_gates);
}

TEST_CASE("loschmidt echo at t = 0 is exactly one") {
  const auto h = single_term("Z", 1.0);
  const auto initial = State::basis_state(1, "0");
  EstimatorOptions options;
  options.n_samples = 32;
  options.master_seed = 12;
  const auto result = estimate_loschmidt(h, 0.0, initial,
                                         AngleAssignment::uniform(1, 0.5),
                                         options);
  CHECK(result.mean.real() == 1.0);
  CHECK(result.mean.imag() == 0.0);
  CHECK(result.stderr_re == 0.0);
}

TEST_CASE("loschmidt echo of a Z field is e^{it}") {
  const auto h = single_term("Z", 1.0);
  const auto initial = State::basis_state(1, "0");
  EstimatorOptions options;
  options.n_samples = 100000;
  options.master_seed = 8;
  const double t = 0.7;
  const auto result = estimate_loschmidt(h, t, initial,
                                         AngleAssignment::uniform(1, 0.5), options);
  CHECK(std::abs(result.mean.real() - std::cos(t)) < 3.0 * result.stderr_re);
  CHECK(std::abs(result.mean.imag() - std::sin(t)) < 3.0 * result.stderr_im);
  CHECK(ratio_R(result) == doctest::Approx(std::tan(t)).epsilon(0.05));
}

TEST_CASE("loschmidt echo of the fermionic toy matches the oracle") {
  const auto h = tetrisim::jordan_wigner(oracle::toy_fermion_instance());
  const auto hf = State::basis_state(4, "1100");
  const double t = 0.5;
  const auto psi = exact_evolve(h, t, hf);
  const auto expected = inner_product(hf, psi);
  EstimatorOptions options;
  options.n_samples = 30000;
  options.master_seed = 9;
  options.n_threads = 2;
  const auto result = estimate_loschmidt(
      h, t, hf, AngleAssignment::uniform(h.n_terms(), 0.3), options);
  CHECK(std::abs(result.mean.real() - expected.real()) < 3.0 * result.stderr_re);
  CHECK(std::abs(result.mean.imag() - expected.imag()) < 3.0 * result.stderr_im);
}

TEST_CASE("ratio_R properties") {
  CHECK(ratio_R(std::polar(1.0, 0.7), 1e-3) ==
        doctest::Approx(std::tan(0.7)).epsilon(1e-12));
  // invariant under positive rescaling
  CHECK(ratio_R(0.3 * std::polar(1.0, 0.7), 1e-4) ==
        doctest::Approx(std::tan(0.7)).epsilon(1e-12));
  CHECK_THROWS_AS(ratio_R(std::complex<double>(0.05, 1.0), 0.1),
                  std::domain_error);
  CHECK_THROWS_AS(ratio_R(std::complex<double>(0.0, 1.0), 0.0),
                  std::domain_error);
}

TEST_CASE("deterministic noise damps by exactly q_att and mitigation undoes it") {
  const auto h = single_term("X", 1.0);
  const auto initial = State::basis_state(1, "0");
  const auto angles = AngleAssignment::uniform(1, 0.5);
  const double t = 0.4;

  const auto noisy = NoiseModel::uniform(
      1, 0.05, NoiseModel::Mode::kDeterministicAttenuation, false);
  EstimatorOptions options;
  options.n_samples = 20000;
  options.master_seed = 10;
  options.noise = &noisy;
  const auto damped =
      estimate_expectation(h, PauliString::parse("Z"), t, initial, angles, options);

  EstimatorOptions clean_options = options;
  clean_options.noise = nullptr;
  const auto clean =
      estimate_expectation(h, PauliString::parse("Z"), t, initial, angles,
                           clean_options);
  // Same streams, constant factor q_att between the two runs.
  CHECK(damped.mean.real() ==
        doctest::Approx(clean.mean.real() * damped.report.q_att).epsilon(1e-12));

  const auto mitigated_model = NoiseModel::uniform(
      1, 0.05, NoiseModel::Mode::kDeterministicAttenuation, true);
  EstimatorOptions mitigated_options = options;
  mitigated_options.noise = &mitigated_model;
  const auto mitigated = estimate_expectation(h, PauliString::parse("Z"), t,
                                              initial, angles, mitigated_options);
  CHECK(mitigated.mean.real() == doctest::Approx(clean.mean.real()).epsilon(1e-12));
}

TEST_CASE("stochastic depolarizing noise stays unbiased after mitigation") {
  const auto h = single_term("X", 1.0);
  const auto initial = State::basis_state(1, "0");
  const auto angles = AngleAssignment::uniform(1, 0.5);
  const double t = 0.4;
  const auto noise = NoiseModel::uniform(
      1, 2e-3, NoiseModel::Mode::kStochasticDepolarizing, true);
  EstimatorOptions options;
  options.n_samples = 100000;
  options.master_seed = 11;
  options.n_threads = 2;
  options.noise = &noise;
  const auto result =
      estimate_expectation(h, PauliString::parse("Z"), t, initial, angles, options);
  CHECK(result.report.q_att < 1.0);
  CHECK(std::abs(result.mean.real() - std::cos(2.0 * t)) < 3.0 * result.stderr_re);
}

TEST_CASE("per-term angles keep the estimator unbiased") {
  // Two terms with distinct angles; lambda_att must combine them per term.
  const auto h = tetrisim::build_ising2d(1, 2, 0.9, false);  // ZZ + 2 X terms
  const auto initial = State::all_zeros(2);
  const AngleAssignment angles({0.2, 0.45, 0.6});
  const double t = 0.5;
  const auto report = attenuation_report(h, t, angles);
  const double expected_lambda =
      std::exp(-2.0 * t *
               (1.0 * std::tan(0.1) + 0.9 * std::tan(0.225) +
                0.9 * std::tan(0.3)));
  CHECK(report.lambda_att == doctest::Approx(expected_lambda).epsilon(1e-12));

  const auto psi = exact_evolve(h, t, initial);
  const double truth = expectation(psi, PauliString::parse("ZI"));
  EstimatorOptions options;
  options.n_samples = 60000;
  options.master_seed = 13;
  options.n_threads = 2;
  const auto result =
      estimate_expectation(h, PauliString::parse("ZI"), t, initial, angles,
                           options);
  CHECK(result.report.lambda_att == doctest::Approx(expected_lambda));
  CHECK(std::abs(result.mean.real() - truth) < 3.0 * result.stderr_re);
}

TEST_CASE("validation") {
  const auto h = single_term("X", 1.0);
  const auto initial = State::basis_state(1, "0");
  const auto angles = AngleAssignment::uniform(1, 0.5);
  EstimatorOptions options;
  options.n_samples = 0;
  CHECK_THROWS_AS(estimate_expectation(h, PauliString::parse("Z"), 1.0, initial,
                                       angles, options),
                  std::invalid_argument);
  options.n_samples = 10;
  CHECK_THROWS_AS(estimate_expectation(h, PauliString::parse("ZZ"), 1.0, initial,
                                       angles, options),
                  std::invalid_argument);
  CHECK_THROWS_AS(estimate_expectation(h, PauliString::parse("Z"), 1.0,
                                       State::all_zeros(2), angles, options),
                  std::invalid_argument);
}

}  // TEST_SUITE
