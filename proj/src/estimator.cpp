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

#include "tetrisim/estimator.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <utility>

namespace tetrisim {

namespace {

using Complex = std::complex<double>;

struct SampleContext {
  const Hamiltonian* h;
  TetrisSampler sampler;
  const AngleAssignment* angles;
  const std::vector<std::size_t>* background;
  const NoiseModel* noise;
  std::vector<double> p_err;          // per term, stochastic mode
  std::vector<std::uint64_t> x_masks; // per term support masks for injection
  std::vector<std::uint64_t> z_masks;
};

// Applies a tetris; in stochastic-depolarizing mode each applied gate is
// followed, with probability p_err, by a uniformly random Pauli on the
// gate's support. Deterministic attenuation is applied as the constant
// q_att factor at the sample level instead (it models the known mean
// damping, so mitigation cancels it exactly).
void apply_tetris_noisy(State& s, const Tetris& tetris,
                        const SampleContext& ctx, RngStream& rng) {
  const bool with_background =
      ctx.background != nullptr && !ctx.background->empty();
  const auto evolve_background = [&](double dt) {
    if (dt <= 0.0) return;
    for (std::size_t idx : *ctx.background) {
      const auto& term = ctx.h->term(idx);
      apply_pauli_rotation(s, term.op, dt * term.coefficient.constant_value());
    }
  };
  const bool inject =
      ctx.noise != nullptr &&
      ctx.noise->mode == NoiseModel::Mode::kStochasticDepolarizing;
  double prev = 0.0;
  for (const TetrisEvent& event : tetris.events) {
    if (with_background) {
      evolve_background(event.time - prev);
      prev = event.time;
    }
    const auto& term = ctx.h->term(event.term);
    apply_pauli_rotation(
        s, term.op, static_cast<double>(event.sign) * ctx.angles->tau(event.term));
    if (!inject) continue;
    if (rng.uniform01() < ctx.p_err[event.term]) {
      // Uniform Pauli (identity included) on the gate's support qubits.
      std::uint64_t x = 0;
      std::uint64_t z = 0;
      std::uint64_t rest = ctx.x_masks[event.term] | ctx.z_masks[event.term];
      while (rest != 0) {
        const std::uint64_t bit = rest & (~rest + 1);
        const std::uint64_t letter = rng.bits(2);  // 0:I 1:X 2:Y 3:Z
        if (letter == 1 || letter == 2) x |= bit;
        if (letter == 2 || letter == 3) z |= bit;
        rest ^= bit;
      }
      if (x != 0 || z != 0) {
        apply_pauli(s, PauliString::from_bits(s.n_qubits(), x, z));
      }
    }
  }
  if (with_background) {
    evolve_background(tetris.horizon - prev);
  }
}

SampleContext make_context(const Hamiltonian& h, double t,
                           const AngleAssignment& angles,
                           const EstimatorOptions& options) {
  if (options.n_samples < 1) {
    throw std::invalid_argument("estimator needs n_samples >= 1");
  }
  if (options.noise != nullptr) options.noise->validate(h.n_terms());
  SampleContext ctx{&h,
                    TetrisSampler(h, t, angles, options.background),
                    &angles,
                    options.background,
                    options.noise,
                    {},
                    {},
                    {}};
  if (options.noise != nullptr &&
      options.noise->mode == NoiseModel::Mode::kStochasticDepolarizing) {
    ctx.p_err.reserve(h.n_terms());
    for (double r : options.noise->rates) {
      ctx.p_err.push_back(1.0 - std::exp(-r));
    }
  }
  ctx.x_masks.reserve(h.n_terms());
  ctx.z_masks.reserve(h.n_terms());
  for (const auto& term : h.terms()) {
    ctx.x_masks.push_back(term.op.x_bits());
    ctx.z_masks.push_back(term.op.z_bits());
  }
  return ctx;
}

// Runs fn(i) for i in [0, n) across workers; slot outputs keep results
// independent of scheduling.
template <typename Fn>
void parallel_for_samples(std::size_t n, int n_threads, const Fn& fn) {
  unsigned threads = n_threads > 0
                         ? static_cast<unsigned>(n_threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) fn(i);
    });
  }
  for (auto& worker : pool) worker.join();
}

EstimatorResult reduce(std::vector<Complex>& samples,
                       const std::vector<double>& gates, double scale,
                       AttenuationReport report) {
  const std::size_t n = samples.size();
  Complex sum(0.0, 0.0);
  double gate_sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    samples[i] *= scale;
    sum += samples[i];
    gate_sum += gates[i];
  }
  const Complex mean = sum / static_cast<double>(n);
  double var_re = 0.0;
  double var_im = 0.0;
  for (const Complex& x : samples) {
    var_re += (x.real() - mean.real()) * (x.real() - mean.real());
    var_im += (x.imag() - mean.imag()) * (x.imag() - mean.imag());
  }
  EstimatorResult result;
  result.mean = mean;
  if (n > 1) {
    const double norm = static_cast<double>(n) * static_cast<double>(n - 1);
    result.stderr_re = std::sqrt(var_re / norm);
    result.stderr_im = std::sqrt(var_im / norm);
  }
  result.n_samples = n;
  result.mean_gates = gate_sum / static_cast<double>(n);
  result.report = std::move(report);
  return result;
}

}  // namespace

EstimatorResult estimate_observable_sum(const Hamiltonian& h,
                                        const ObservableSum& observable,
                                        double t, const State& initial,
                                        const AngleAssignment& angles,
                                        const EstimatorOptions& options) {
  if (observable.empty()) {
    throw std::invalid_argument("observable must have at least one term");
  }
  for (const auto& weighted : observable) {
    if (weighted.op.n_qubits() != h.n_qubits()) {
      throw std::invalid_argument("observable size differs from Hamiltonian");
    }
  }
  if (initial.n_qubits() != h.n_qubits()) {
    throw std::invalid_argument("initial state size differs from Hamiltonian");
  }
  const SampleContext ctx = make_context(h, t, angles, options);
  AttenuationReport report =
      attenuation_report(h, t, angles, options.noise, options.background);

  const double damping =
      options.noise != nullptr &&
              options.noise->mode == NoiseModel::Mode::kDeterministicAttenuation
          ? report.q_att
          : 1.0;
  std::vector<Complex> samples(options.n_samples);
  std::vector<double> gates(options.n_samples);
  parallel_for_samples(options.n_samples, options.n_threads, [&](std::size_t i) {
    RngStream rng(derive_stream_seed(options.master_seed, i));
    const Tetris ket_tetris = ctx.sampler.draw(rng);
    const Tetris bra_tetris = ctx.sampler.draw(rng);
    State ket = initial;
    apply_tetris_noisy(ket, ket_tetris, ctx, rng);
    State bra = initial;
    apply_tetris_noisy(bra, bra_tetris, ctx, rng);
    Complex x(0.0, 0.0);
    for (const auto& [weight, op] : observable) {
      x += weight * matrix_element(bra, op, ket);
    }
    samples[i] = x * damping;
    gates[i] = static_cast<double>(ket_tetris.events.size() +
                                   bra_tetris.events.size());
  });

  double scale = 1.0 / report.lambda_att;
  if (options.noise != nullptr && options.noise->mitigate) {
    scale /= report.q_att;
  }
  return reduce(samples, gates, scale, std::move(report));
}

EstimatorResult estimate_expectation(const Hamiltonian& h,
                                     const PauliString& observable, double t,
                                     const State& initial,
                                     const AngleAssignment& angles,
                                     const EstimatorOptions& options) {
  return estimate_observable_sum(h, {{1.0, observable}}, t, initial, angles,
                                 options);
}

EstimatorResult estimate_energy(const Hamiltonian& h, double t,
                                const State& initial,
                                const AngleAssignment& angles,
                                const EstimatorOptions& options) {
  ObservableSum observable;
  observable.reserve(h.n_terms());
  for (const auto& term : h.terms()) {
    observable.push_back({term.coefficient.value(t), term.op});
  }
  return estimate_observable_sum(h, observable, t, initial, angles, options);
}

EstimatorResult estimate_loschmidt(const Hamiltonian& h, double t,
                                   const State& initial,
                                   const AngleAssignment& angles,
                                   const EstimatorOptions& options) {
  if (initial.n_qubits() != h.n_qubits()) {
    throw std::invalid_argument("initial state size differs from Hamiltonian");
  }
  const SampleContext ctx = make_context(h, t, angles, options);
  AttenuationReport report =
      attenuation_report(h, t, angles, options.noise, options.background);

  const double damping =
      options.noise != nullptr &&
              options.noise->mode == NoiseModel::Mode::kDeterministicAttenuation
          ? std::sqrt(report.q_att)
          : 1.0;
  std::vector<Complex> samples(options.n_samples);
  std::vector<double> gates(options.n_samples);
  parallel_for_samples(options.n_samples, options.n_threads, [&](std::size_t i) {
    RngStream rng(derive_stream_seed(options.master_seed, i));
    const Tetris tetris = ctx.sampler.draw(rng);
    State psi = initial;
    apply_tetris_noisy(psi, tetris, ctx, rng);
    samples[i] = inner_product(initial, psi) * damping;
    gates[i] = static_cast<double>(tetris.events.size());
  });

  double scale = 1.0 / std::sqrt(report.lambda_att);
  if (options.noise != nullptr && options.noise->mitigate) {
    scale /= std::sqrt(report.q_att);
  }
  return reduce(samples, gates, scale, std::move(report));
}

double ratio_R(std::complex<double> loschmidt, double stderr_re) {
  if (std::abs(loschmidt.real()) <= 10.0 * stderr_re ||
      loschmidt.real() == 0.0) {
    throw std::domain_error(
        "ratio undefined: Re(L) statistically indistinguishable from zero");
  }
  return loschmidt.imag() / loschmidt.real();
}

double ratio_R(const EstimatorResult& loschmidt) {
  return ratio_R(loschmidt.mean, loschmidt.stderr_re);
}

}  // namespace tetrisim
