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

#include "tetrisim/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace tetrisim {

namespace {

void validate_angles(const AngleAssignment& angles, const Hamiltonian& h) {
  if (angles.size() != h.n_terms()) {
    throw std::invalid_argument("angle count differs from Hamiltonian terms");
  }
}

void validate_background(const Hamiltonian& h,
                         const std::vector<std::size_t>& background) {
  for (std::size_t idx : background) {
    if (idx >= h.n_terms()) {
      throw std::invalid_argument("background term index out of range");
    }
    if (!h.term(idx).coefficient.is_constant()) {
      throw std::invalid_argument(
          "background terms must have constant coefficients");
    }
  }
  for (std::size_t a = 0; a < background.size(); ++a) {
    for (std::size_t b = a + 1; b < background.size(); ++b) {
      if (!commutes(h.term(background[a]).op, h.term(background[b]).op)) {
        throw std::invalid_argument("background terms must commute pairwise");
      }
    }
  }
}

}  // namespace

AngleAssignment::AngleAssignment(std::vector<double> taus)
    : taus_(std::move(taus)) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  if (taus_.empty()) {
    throw std::invalid_argument("angle assignment must not be empty");
  }
  for (double tau : taus_) {
    if (!(tau > 0.0) || tau > kHalfPi + 1e-15) {
      throw std::invalid_argument("angles must lie in (0, pi/2]");
    }
  }
}

AngleAssignment AngleAssignment::uniform(std::size_t n_terms, double tau) {
  return AngleAssignment(std::vector<double>(n_terms, tau));
}

TetrisSampler::TetrisSampler(const Hamiltonian& h, double t,
                             const AngleAssignment& angles,
                             const std::vector<std::size_t>* background)
    : hamiltonian_(&h), horizon_(t) {
  if (t < 0.0) {
    throw std::invalid_argument("sampling horizon must be >= 0");
  }
  validate_angles(angles, h);
  if (t > h.horizon()) {
    throw std::domain_error("sampling horizon beyond schedule horizon");
  }
  if (background != nullptr) {
    validate_background(h, *background);
    background_ = *background;
  }
  std::vector<bool> skip(h.n_terms(), false);
  for (std::size_t idx : background_) skip[idx] = true;

  plans_.reserve(h.n_terms());
  for (std::size_t n = 0; n < h.n_terms(); ++n) {
    const auto& sched = h.term(n).coefficient;
    TermPlan plan;
    plan.skip = skip[n];
    plan.constant = sched.is_constant();
    plan.constant_value = plan.constant ? sched.constant_value() : 0.0;
    if (plan.skip) {
      plan.budget = 0.0;
    } else {
      plan.profile = ScheduleProfile(sched, t);
      plan.budget = plan.profile.z_total() / std::sin(angles.tau(n));
    }
    plans_.push_back(std::move(plan));
  }
}

Tetris TetrisSampler::draw(RngStream& rng) const {
  Tetris tetris;
  tetris.horizon = horizon_;
  for (std::size_t n = 0; n < plans_.size(); ++n) {
    const TermPlan& plan = plans_[n];
    if (plan.skip || plan.budget <= 0.0) continue;
    const std::uint64_t count = rng.poisson(plan.budget);
    for (std::uint64_t i = 0; i < count; ++i) {
      double time;
      std::int8_t sign;
      if (plan.constant) {
        time = rng.uniform(0.0, horizon_);
        sign = plan.constant_value < 0.0 ? -1 : 1;
      } else {
        const double u = rng.uniform(0.0, plan.profile.z_total());
        time = plan.profile.time_of_z(u);
        const double c = hamiltonian_->term(n).coefficient.value(time);
        sign = c < 0.0 ? -1 : 1;  // sgn(0) := +1
      }
      tetris.events.push_back(
          {time, static_cast<std::uint32_t>(n), sign});
    }
  }
  std::sort(tetris.events.begin(), tetris.events.end(),
            [](const TetrisEvent& a, const TetrisEvent& b) {
              if (a.time != b.time) return a.time < b.time;
              return a.term < b.term;
            });
  return tetris;
}

Tetris draw_tetris(const Hamiltonian& h, double t, const AngleAssignment& angles,
                   RngStream& rng) {
  if (!h.is_constant()) {
    throw std::invalid_argument(
        "draw_tetris requires constant coefficients; use draw_tetris_td");
  }
  return TetrisSampler(h, t, angles).draw(rng);
}

Tetris draw_tetris_td(const Hamiltonian& h, double t,
                      const AngleAssignment& angles, RngStream& rng) {
  return TetrisSampler(h, t, angles).draw(rng);
}

Tetris draw_tetris_background(const Hamiltonian& h,
                              const std::vector<std::size_t>& background,
                              double t, const AngleAssignment& angles,
                              RngStream& rng) {
  return TetrisSampler(h, t, angles, &background).draw(rng);
}

void apply_tetris(State& s, const Tetris& tetris, const Hamiltonian& h,
                  const AngleAssignment& angles,
                  const std::vector<std::size_t>* background) {
  validate_angles(angles, h);
  if (s.n_qubits() != h.n_qubits()) {
    throw std::invalid_argument("state and Hamiltonian sizes differ");
  }
  const bool with_background = background != nullptr && !background->empty();
  if (with_background) {
    validate_background(h, *background);
  }
  const auto evolve_background = [&](double dt) {
    if (dt <= 0.0) return;
    for (std::size_t idx : *background) {
      const auto& term = h.term(idx);
      apply_pauli_rotation(s, term.op,
                           dt * term.coefficient.constant_value());
    }
  };
  double prev = 0.0;
  for (const TetrisEvent& event : tetris.events) {
    if (with_background) {
      evolve_background(event.time - prev);
      prev = event.time;
    }
    const double theta = static_cast<double>(event.sign) * angles.tau(event.term);
    apply_pauli_rotation(s, h.term(event.term).op, theta);
  }
  if (with_background) {
    evolve_background(tetris.horizon - prev);
  }
}

AttenuationReport attenuation_report(
    const Hamiltonian& h, double t, const AngleAssignment& angles,
    const NoiseModel* noise, const std::vector<std::size_t>* background) {
  validate_angles(angles, h);
  if (noise != nullptr) noise->validate(h.n_terms());
  std::vector<bool> skip(h.n_terms(), false);
  if (background != nullptr) {
    validate_background(h, *background);
    for (std::size_t idx : *background) skip[idx] = true;
  }
  AttenuationReport report;
  report.z_values = h.z_values(t);
  double lambda_exponent = 0.0;
  double q_exponent = 0.0;
  double gates = 0.0;
  for (std::size_t n = 0; n < h.n_terms(); ++n) {
    if (skip[n]) continue;
    const double z = report.z_values[n];
    const double tau = angles.tau(n);
    lambda_exponent += z * std::tan(0.5 * tau);
    gates += z / std::sin(tau);
    if (noise != nullptr) {
      q_exponent += noise->rates[n] * z / std::sin(tau);
    }
  }
  report.lambda_att = std::exp(-2.0 * lambda_exponent);
  report.q_att = std::exp(-2.0 * q_exponent);
  report.expected_gates = gates;
  return report;
}

void write_tetris(std::ostream& out, const Tetris& tetris,
                  const AngleAssignment& angles, std::uint64_t seed) {
  out.precision(17);
  out << "# tetris dump\n";
  out << "# t = " << tetris.horizon << "\n";
  out << "# seed = " << seed << "\n";
  out << "# angles =";
  for (double tau : angles.values()) {
    out << ' ' << tau;
  }
  out << "\n";
  out << "# columns: time term_index sign (term_index is 1-based)\n";
  for (const TetrisEvent& event : tetris.events) {
    out << event.time << ' ' << event.term + 1 << ' '
        << static_cast<int>(event.sign) << "\n";
  }
}

}  // namespace tetrisim
