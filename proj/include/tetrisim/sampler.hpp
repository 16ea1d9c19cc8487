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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "tetrisim/hamiltonian.hpp"
#include "tetrisim/noise.hpp"
#include "tetrisim/rng.hpp"
#include "tetrisim/state.hpp"

namespace tetrisim {

/// Per-term gate angles tau_n, each in (0, pi/2].
class AngleAssignment {
 public:
  explicit AngleAssignment(std::vector<double> taus);
  static AngleAssignment uniform(std::size_t n_terms, double tau);

  std::size_t size() const { return taus_.size(); }
  double tau(std::size_t n) const { return taus_.at(n); }
  const std::vector<double>& values() const { return taus_; }

 private:
  std::vector<double> taus_;
};

/// One sampled gate: fire term `term` (0-based) at `time` with the sign of
/// its coefficient there.
struct TetrisEvent {
  double time;
  std::uint32_t term;
  std::int8_t sign;  // +1 or -1
};

/// A random gate configuration drawn from the per-term Poisson processes,
/// sorted by time (ties broken by term index).
struct Tetris {
  std::vector<TetrisEvent> events;
  double horizon = 0.0;
};

/// Deterministic planning numbers for a (H, t, angles) context:
///   lambda_att = exp(-2 sum_n z_n(t) tan(tau_n / 2)),
///   q_att      = exp(-2 sum_n r_n z_n(t) / sin(tau_n)) (1 without noise),
///   expected_gates = sum_n z_n(t) / sin(tau_n) per single tetris,
/// with background terms excluded from all three sums.
struct AttenuationReport {
  double lambda_att = 1.0;
  double q_att = 1.0;
  double expected_gates = 0.0;
  std::vector<double> z_values;  // per-term z_n(t), background included
};

/// Event sampler bound to one (Hamiltonian, horizon, angles, background)
/// context. Construction precomputes per-term Poisson budgets
/// z_n(t)/sin(tau_n) and, for time-dependent coefficients, the cumulative
/// profiles used to map uniform draws through z_n^{-1}. Drawing is cheap and
/// pure given an explicit stream, so tetrises may be drawn concurrently from
/// independently derived streams.
class TetrisSampler {
 public:
  /// `background`, when given, lists term indices whose gates are never
  /// drawn; they must be mutually commuting and constant-coefficient.
  TetrisSampler(const Hamiltonian& h, double t, const AngleAssignment& angles,
                const std::vector<std::size_t>* background = nullptr);

  Tetris draw(RngStream& rng) const;

  double horizon() const { return horizon_; }
  const std::vector<std::size_t>& background() const { return background_; }

 private:
  struct TermPlan {
    double budget;              // z_n(t) / sin(tau_n)
    ScheduleProfile profile;    // inverse-z map over [0, t]
    bool constant;
    double constant_value;
    bool skip;                  // background member
  };

  const Hamiltonian* hamiltonian_;
  double horizon_;
  std::vector<TermPlan> plans_;
  std::vector<std::size_t> background_;
};

/// Draws one tetris for a constant Hamiltonian: per term a Poisson count
/// with mean |c_n| t / sin(tau_n) and uniform times on [0, t].
Tetris draw_tetris(const Hamiltonian& h, double t, const AngleAssignment& angles,
                   RngStream& rng);

/// Time-dependent variant: Poisson mean z_n(t)/sin(tau_n), times drawn
/// uniformly on [0, z_n(t)] and mapped through z_n^{-1}; the event sign is
/// sgn(c_n(s)) at the mapped time (sgn(0) := +1).
Tetris draw_tetris_td(const Hamiltonian& h, double t,
                      const AngleAssignment& angles, RngStream& rng);

/// Background variant: draws events only for terms outside `background`.
/// The background terms must commute pairwise and be constant-coefficient.
Tetris draw_tetris_background(const Hamiltonian& h,
                              const std::vector<std::size_t>& background,
                              double t, const AngleAssignment& angles,
                              RngStream& rng);

/// Applies a tetris to `s`: events in time order, each e^{i sign tau_n O_n}.
/// With a background set, every inter-event gap (including the leading and
/// trailing ones) evolves exactly under the commuting background terms.
void apply_tetris(State& s, const Tetris& tetris, const Hamiltonian& h,
                  const AngleAssignment& angles,
                  const std::vector<std::size_t>* background = nullptr);

/// Attenuation and gate-count planning numbers; see AttenuationReport.
AttenuationReport attenuation_report(
    const Hamiltonian& h, double t, const AngleAssignment& angles,
    const NoiseModel* noise = nullptr,
    const std::vector<std::size_t>* background = nullptr);

/// Plain-text dump: provenance header then one `time term_index sign` line
/// per event (term_index is 1-based in the file).
void write_tetris(std::ostream& out, const Tetris& tetris,
                  const AngleAssignment& angles, std::uint64_t seed);

}  // namespace tetrisim
