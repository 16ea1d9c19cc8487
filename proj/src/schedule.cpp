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

#include "tetrisim/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tetrisim {

namespace {

constexpr double kQuadratureTol = 1e-10;
constexpr int kMaxQuadratureDepth = 60;

double simpson(double a, double fa, double b, double fb, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adaptive_simpson_rec(const F& f, double a, double fa, double b,
                            double fb, double fm, double whole, double tol,
                            int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(a, fa, m, fm, flm);
  const double right = simpson(m, fm, b, fb, frm);
  const double delta = left + right - whole;
  if (depth >= kMaxQuadratureDepth || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adaptive_simpson_rec(f, a, fa, m, fm, flm, left, 0.5 * tol,
                              depth + 1) +
         adaptive_simpson_rec(f, m, fm, b, fb, frm, right, 0.5 * tol,
                              depth + 1);
}

template <typename F>
double adaptive_simpson(const F& f, double a, double b, double tol) {
  if (b <= a) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = simpson(a, fa, b, fb, fm);
  return adaptive_simpson_rec(f, a, fa, b, fb, fm, whole, tol, 0);
}

// Integral of |v| over [s1, s2] for the linear interpolant through
// (s1, y1), (s2, y2); splits at the sign-change root when present.
double abs_linear_integral(double s1, double y1, double s2, double y2) {
  const double w = s2 - s1;
  if (w <= 0.0) return 0.0;
  if (y1 == 0.0 && y2 == 0.0) return 0.0;
  if (y1 * y2 >= 0.0) {
    return 0.5 * (std::abs(y1) + std::abs(y2)) * w;
  }
  const double root = s1 + w * y1 / (y1 - y2);
  return 0.5 * std::abs(y1) * (root - s1) + 0.5 * std::abs(y2) * (s2 - root);
}

}  // namespace

CoefficientSchedule CoefficientSchedule::constant(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("constant coefficient must be finite");
  }
  return CoefficientSchedule(Constant{value});
}

CoefficientSchedule CoefficientSchedule::adiabatic(double amplitude,
                                                   double t_final) {
  if (!std::isfinite(amplitude)) {
    throw std::invalid_argument("adiabatic amplitude must be finite");
  }
  if (!(t_final > 0.0)) {
    throw std::invalid_argument("adiabatic t_final must be positive");
  }
  return CoefficientSchedule(AdiabaticField{amplitude, t_final});
}

CoefficientSchedule CoefficientSchedule::tabulated(std::vector<double> times,
                                                   std::vector<double> values) {
  if (times.size() != values.size() || times.size() < 2) {
    throw std::invalid_argument(
        "tabulated schedule needs matching time/value lists with >= 2 knots");
  }
  if (times.front() != 0.0) {
    throw std::invalid_argument("tabulated schedule must start at t = 0");
  }
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    if (!(times[i] < times[i + 1])) {
      throw std::invalid_argument("tabulated knot times must be increasing");
    }
  }
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("tabulated values must be finite");
    }
  }
  return CoefficientSchedule(Tabulated{std::move(times), std::move(values)});
}

double CoefficientSchedule::value(double t) const {
  if (t < 0.0 || t > horizon()) {
    throw std::domain_error("schedule evaluated outside [0, horizon]");
  }
  if (const auto* c = std::get_if<Constant>(&repr_)) {
    return c->value;
  }
  if (const auto* a = std::get_if<AdiabaticField>(&repr_)) {
    const double inner = std::sin(std::numbers::pi * t / (2.0 * a->t_final));
    const double s = std::sin(0.5 * std::numbers::pi * inner * inner);
    return a->amplitude * s * s;
  }
  const auto& tab = std::get<Tabulated>(repr_);
  const auto it =
      std::upper_bound(tab.times.begin(), tab.times.end(), t);
  if (it == tab.times.begin()) return tab.values.front();
  if (it == tab.times.end()) return tab.values.back();
  const std::size_t hi = static_cast<std::size_t>(it - tab.times.begin());
  const std::size_t lo = hi - 1;
  const double frac = (t - tab.times[lo]) / (tab.times[hi] - tab.times[lo]);
  return tab.values[lo] + frac * (tab.values[hi] - tab.values[lo]);
}

double CoefficientSchedule::horizon() const {
  if (std::holds_alternative<Constant>(repr_)) {
    return std::numeric_limits<double>::infinity();
  }
  if (const auto* a = std::get_if<AdiabaticField>(&repr_)) {
    return a->t_final;
  }
  return std::get<Tabulated>(repr_).times.back();
}

bool CoefficientSchedule::is_constant() const {
  return std::holds_alternative<Constant>(repr_);
}

double CoefficientSchedule::constant_value() const {
  if (const auto* c = std::get_if<Constant>(&repr_)) {
    return c->value;
  }
  throw std::logic_error("schedule is not constant");
}

double CoefficientSchedule::z(double t) const {
  if (t < 0.0 || t > horizon()) {
    throw std::domain_error("z(t) requested outside [0, horizon]");
  }
  if (const auto* c = std::get_if<Constant>(&repr_)) {
    return std::abs(c->value) * t;
  }
  if (std::holds_alternative<AdiabaticField>(repr_)) {
    return adaptive_simpson([this](double s) { return std::abs(value(s)); },
                            0.0, t, kQuadratureTol);
  }
  const auto& tab = std::get<Tabulated>(repr_);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < tab.times.size(); ++i) {
    const double s1 = tab.times[i];
    if (s1 >= t) break;
    const double s2 = std::min(tab.times[i + 1], t);
    const double y1 = tab.values[i];
    const double y2 = value(s2);
    total += abs_linear_integral(s1, y1, s2, y2);
  }
  return total;
}

double CoefficientSchedule::z_inverse(double u) const {
  if (const auto* c = std::get_if<Constant>(&repr_)) {
    const double a = std::abs(c->value);
    if (u < 0.0) throw std::domain_error("z_inverse argument below 0");
    if (a == 0.0) {
      if (u > 0.0) throw std::domain_error("z_inverse argument above z(horizon)");
      return 0.0;
    }
    return u / a;
  }
  const double hor = horizon();
  const double z_total = z(hor);
  const double slack = 1e-9 * std::max(1.0, z_total);
  if (u < 0.0 || u > z_total + slack) {
    throw std::domain_error("z_inverse argument outside [0, z(horizon)]");
  }
  if (u <= 0.0) return 0.0;
  if (u >= z_total) u = z_total;
  // z is non-decreasing; bisect on z(s) >= u so flat stretches resolve to
  // their left endpoint.
  double lo = 0.0;
  double hi = hor;
  const double tol = 1e-12 * std::max(1.0, z_total);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double zm = z(mid);
    if (zm >= u) {
      hi = mid;
    } else {
      lo = mid;
    }
    if (hi - lo < 1e-15 * std::max(1.0, hor) && std::abs(zm - u) <= tol) {
      break;
    }
  }
  return 0.5 * (lo + hi);
}

std::string CoefficientSchedule::describe() const {
  std::ostringstream out;
  out.precision(17);
  if (const auto* c = std::get_if<Constant>(&repr_)) {
    out << "constant(" << c->value << ")";
  } else if (const auto* a = std::get_if<AdiabaticField>(&repr_)) {
    out << "adiabatic(" << a->amplitude << ", " << a->t_final << ")";
  } else {
    const auto& tab = std::get<Tabulated>(repr_);
    out << "tabulated(" << tab.times.size() << " knots)";
  }
  return out.str();
}

CoefficientSchedule adiabatic_field(double h_f, double t_final) {
  return CoefficientSchedule::adiabatic(h_f, t_final);
}

ScheduleProfile::ScheduleProfile(const CoefficientSchedule& schedule, double t,
                                 int cells) {
  if (t < 0.0) throw std::invalid_argument("profile horizon must be >= 0");
  horizon_ = t;
  if (schedule.is_constant()) {
    constant_ = true;
    abs_value_ = std::abs(schedule.constant_value());
    z_total_ = abs_value_ * t;
    return;
  }
  if (t > schedule.horizon()) {
    throw std::domain_error("profile horizon beyond schedule horizon");
  }
  constant_ = false;
  if (cells < 1) throw std::invalid_argument("profile needs >= 1 cell");
  dt_ = t / cells;
  grid_z_.assign(static_cast<std::size_t>(cells) + 1, 0.0);
  if (t == 0.0) return;
  double acc = 0.0;
  double f0 = std::abs(schedule.value(0.0));
  for (int k = 0; k < cells; ++k) {
    const double a = k * dt_;
    // Two-panel Simpson per cell; the grid is fine enough that the
    // piecewise-linear inverse below stays well under sampling resolution.
    const double f1 = std::abs(schedule.value(a + 0.25 * dt_));
    const double f2 = std::abs(schedule.value(a + 0.5 * dt_));
    const double f3 = std::abs(schedule.value(a + 0.75 * dt_));
    const double f4 = std::abs(schedule.value(std::min(a + dt_, t)));
    acc += dt_ / 12.0 * (f0 + 4.0 * f1 + 2.0 * f2 + 4.0 * f3 + f4);
    grid_z_[static_cast<std::size_t>(k) + 1] = acc;
    f0 = f4;
  }
  z_total_ = acc;
}

double ScheduleProfile::time_of_z(double u) const {
  if (u <= 0.0) return 0.0;
  if (constant_) {
    if (abs_value_ == 0.0) return 0.0;
    return std::min(u / abs_value_, horizon_);
  }
  if (u >= z_total_) return horizon_;
  const auto it = std::upper_bound(grid_z_.begin(), grid_z_.end(), u);
  const std::size_t hi = static_cast<std::size_t>(it - grid_z_.begin());
  const std::size_t lo = hi - 1;
  const double dz = grid_z_[hi] - grid_z_[lo];
  const double frac = dz > 0.0 ? (u - grid_z_[lo]) / dz : 0.0;
  return (static_cast<double>(lo) + frac) * dt_;
}

}  // namespace tetrisim
