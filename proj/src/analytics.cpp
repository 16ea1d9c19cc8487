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

#include "tetrisim/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tetrisim {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Per-gate attenuation exponent whose minimum sets the optimal angle.
double attenuation_exponent(double tau, double r) {
  return std::tan(0.5 * tau) + r / std::sin(tau);
}

double golden_section_minimize(double r) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = 1e-9;
  double b = kHalfPi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = attenuation_exponent(x1, r);
  double f2 = attenuation_exponent(x2, r);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = attenuation_exponent(x1, r);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = attenuation_exponent(x2, r);
    }
  }
  return 0.5 * (a + b);
}

double sum_abs_or_time_average(const Hamiltonian& h, double t) {
  if (h.is_constant()) {
    return h.sum_abs_coefficients();
  }
  if (!(t > 0.0)) {
    throw std::invalid_argument(
        "time-dependent shot estimates need t > 0");
  }
  double total = 0.0;
  for (double z : h.z_values(t)) {
    total += z / t;
  }
  return total;
}

}  // namespace

AngleAssignment optimal_angles(const std::vector<double>& rates,
                               AngleMethod method, double floor_angle) {
  if (rates.empty()) {
    throw std::invalid_argument("optimal_angles needs at least one rate");
  }
  if (!(floor_angle > 0.0) || floor_angle > kHalfPi) {
    throw std::invalid_argument("floor angle must lie in (0, pi/2]");
  }
  std::vector<double> taus;
  taus.reserve(rates.size());
  for (double r : rates) {
    if (r < 0.0) throw std::invalid_argument("noise rate must be >= 0");
    double tau;
    if (r == 0.0) {
      tau = floor_angle;
    } else if (method == AngleMethod::kSmallR) {
      tau = std::min(std::sqrt(2.0 * r), kHalfPi);
    } else {
      tau = golden_section_minimize(r);
    }
    taus.push_back(std::max(tau, floor_angle));
  }
  return AngleAssignment(std::move(taus));
}

double shots_tetris(const Hamiltonian& h, double t, double epsilon, double r) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (r < 0.0) throw std::invalid_argument("noise rate must be >= 0");
  const double sum_abs = sum_abs_or_time_average(h, t);
  return std::exp(4.0 * t * std::sqrt(2.0 * r) * sum_abs) / (epsilon * epsilon);
}

double shots_trotter(std::size_t n_terms, double t, double epsilon, double C,
                     double r) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (n_terms < 1) throw std::invalid_argument("n_terms must be >= 1");
  if (C < 0.0 || r < 0.0) {
    throw std::invalid_argument("C and r must be >= 0");
  }
  const double n = static_cast<double>(n_terms);
  return std::exp(2.0 * n * n * t * t * t * C * r / epsilon) /
         (epsilon * epsilon);
}

double crossover_epsilon(const Hamiltonian& h, double t, double C, double r) {
  if (C < 0.0 || r < 0.0) {
    throw std::invalid_argument("C and r must be >= 0");
  }
  const double sum_abs = sum_abs_or_time_average(h, t);
  const double n = static_cast<double>(h.n_terms());
  return t * t * n * n * C * std::sqrt(r) /
         (2.0 * std::numbers::sqrt2 * sum_abs);
}

ShotEstimate shot_estimate(const Hamiltonian& h, double t, double epsilon,
                           double C, double r) {
  return {shots_tetris(h, t, epsilon, r),
          shots_trotter(h.n_terms(), t, epsilon, C, r), epsilon, C,
          crossover_epsilon(h, t, C, r)};
}

}  // namespace tetrisim
