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

#include <limits>
#include <string>
#include <variant>
#include <vector>

namespace tetrisim {

/// A real, possibly time-dependent coefficient c(t) attached to a
/// Hamiltonian term, together with its integrated absolute weight
/// z(t) = \int_0^t |c(s)| ds and the inverse of z.
///
/// Three shapes are supported:
///  - Constant(value): c(t) = value for all t >= 0.
///  - AdiabaticField(amplitude, t_final):
///      c(t) = amplitude * sin^2((pi/2) * sin^2(pi t / (2 t_final)))
///    defined on [0, t_final]; c(0) = 0 and c(t_final) = amplitude.
///  - Tabulated(times, values): piecewise-linear interpolation through the
///    knots; defined on [times.front(), times.back()] with times.front()==0.
class CoefficientSchedule {
 public:
  struct Constant {
    double value;
  };
  struct AdiabaticField {
    double amplitude;
    double t_final;
  };
  struct Tabulated {
    std::vector<double> times;
    std::vector<double> values;
  };

  static CoefficientSchedule constant(double value);
  static CoefficientSchedule adiabatic(double amplitude, double t_final);
  static CoefficientSchedule tabulated(std::vector<double> times,
                                       std::vector<double> values);

  /// c(t). Throws std::domain_error outside [0, horizon].
  double value(double t) const;

  /// Latest time at which the schedule is defined (+inf for Constant).
  double horizon() const;

  bool is_constant() const;
  /// Throws unless is_constant().
  double constant_value() const;

  /// z(t) = \int_0^t |c(s)| ds. Exact for Constant and Tabulated, adaptive
  /// Simpson quadrature with absolute tolerance 1e-10 otherwise.
  double z(double t) const;

  /// Smallest s with z(s) = u, found by monotone bisection; on an interval
  /// where |c| vanishes (z flat) the left endpoint is returned. The result
  /// satisfies |z(s) - u| <= 1e-12 * max(1, z(horizon)).
  /// Throws std::domain_error when u is outside [0, z(horizon)].
  double z_inverse(double u) const;

  /// One-line description for provenance headers, e.g. "constant(-1)".
  std::string describe() const;

 private:
  explicit CoefficientSchedule(std::variant<Constant, AdiabaticField, Tabulated> repr)
      : repr_(std::move(repr)) {}

  std::variant<Constant, AdiabaticField, Tabulated> repr_;
};

/// The time-dependent magnetic field used for adiabatic ramps,
/// h(t) = h_f * sin^2((pi/2) * sin^2(pi t / (2 t_final))), with h(0) = 0 and
/// h(t_final) = h_f.
CoefficientSchedule adiabatic_field(double h_f, double t_final);

/// Precomputed cumulative |c| profile over [0, t], used by the event sampler
/// to map uniform draws in [0, z(t)] back to times without re-running
/// quadrature per event. Constant schedules invert in closed form; the rest
/// use a dense cumulative-Simpson grid with piecewise-linear inversion
/// (grid resolution keeps the time error below ~1e-8 * t for smooth
/// schedules).
class ScheduleProfile {
 public:
  ScheduleProfile() = default;
  ScheduleProfile(const CoefficientSchedule& schedule, double t,
                  int cells = 8192);

  double z_total() const { return z_total_; }

  /// Time s with z(s) ~= u, for u in [0, z_total()].
  double time_of_z(double u) const;

 private:
  bool constant_ = true;
  double abs_value_ = 0.0;  // |c| for the constant fast path
  double horizon_ = 0.0;
  double dt_ = 0.0;
  double z_total_ = 0.0;
  std::vector<double> grid_z_;  // cumulative z at grid nodes, size cells+1
};

}  // namespace tetrisim
