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

#pragma once

#include <cstddef>
#include <vector>

#include "tetrisim/hamiltonian.hpp"
#include "tetrisim/sampler.hpp"

namespace tetrisim {

/// How optimal_angles resolves the minimizer of the per-term total
/// attenuation factor exp(-2 z_n (tan(tau/2) + r_n / sin(tau))).
enum class AngleMethod {
  kSmallR,   // closed form sqrt(2 r_n), valid to O(r_n)
  kNumeric,  // golden-section minimum of tan(tau/2) + r_n / sin(tau)
};

/// Fallback angle when r_n = 0: the noiseless optimum tau -> 0 would make
/// the expected circuit length diverge, so a small positive floor is used.
inline constexpr double kDefaultAngleFloor = 1e-4;

/// Noise-optimal per-term angles for the given attenuation rates.
AngleAssignment optimal_angles(const std::vector<double>& rates,
                               AngleMethod method,
                               double floor_angle = kDefaultAngleFloor);

/// Shot count for the randomized estimator at precision epsilon under a
/// uniform depolarizing rate r, at the noise-optimal angles:
///   exp(4 t sqrt(2 r) sum_n |c_n|) / epsilon^2.
/// For time-dependent coefficients |c_n| is replaced by z_n(t) / t.
double shots_tetris(const Hamiltonian& h, double t, double epsilon, double r);

/// Shot count for a first-order product formula whose discretization error
/// coefficient is C:
///   exp(2 N^2 t^3 C r / epsilon) / epsilon^2.
double shots_trotter(std::size_t n_terms, double t, double epsilon, double C,
                     double r);

/// Precision below which the randomized estimator needs exponentially fewer
/// shots than the first-order formula:
///   t^2 N^2 C sqrt(r) / (2 sqrt(2) sum_n |c_n|).
double crossover_epsilon(const Hamiltonian& h, double t, double C, double r);

/// Bundle of the shot-count quantities above for one (H, t, epsilon, C, r)
/// point. C is user-supplied: it is the problem-dependent coefficient of the
/// first-order discretization error and is not estimated from H.
struct ShotEstimate {
  double m_tetris;
  double m_trotter;
  double epsilon;
  double trotter_error_coefficient;
  double crossover;
};

ShotEstimate shot_estimate(const Hamiltonian& h, double t, double epsilon,
                           double C, double r);

}  // namespace tetrisim
