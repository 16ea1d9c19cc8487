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

#include "tetrisim/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "tetrisim/analytics.hpp"
#include "tetrisim/estimator.hpp"
#include "tetrisim/evolve.hpp"
#include "tetrisim/fermion.hpp"
#include "tetrisim/version.hpp"

namespace tetrisim {

namespace {

struct ResultRow {
  double t;
  std::complex<double> mean;
  double stderr_re = 0.0;
  double stderr_im = 0.0;
  std::size_t n_samples = 0;
  double lambda_att = 1.0;
  double q_att = 1.0;
  std::optional<double> ratio;  // loschmidt only
};

void write_file_atomically(const std::filesystem::path& path,
                           const std::string& content) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw std::runtime_error("cannot open output file: " + tmp.string());
    }
    out << content;
    if (!out) {
      throw std::runtime_error("write failed: " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

std::string provenance_header(const ExperimentConfig& cfg,
                              const std::string& command) {
  std::ostringstream out;
  out << "# tetrisim " << kVersion << "\n";
  out << "# command = " << command << "\n";
  out << "# config_hash = " << cfg.config_hash() << "\n";
  out << "# seed = " << cfg.seed << "\n";
  std::istringstream resolved(cfg.resolved_text());
  std::string line;
  while (std::getline(resolved, line)) {
    out << "# " << line << "\n";
  }
  return out.str();
}

std::string render_csv(const ExperimentConfig& cfg, const std::string& command,
                       const std::vector<ResultRow>& rows, bool with_ratio) {
  std::ostringstream out;
  out.precision(17);
  out << provenance_header(cfg, command);
  out << "t,mean_re,mean_im,stderr_re,stderr_im,n_samples,lambda_att,q_att";
  if (with_ratio) out << ",ratio_r";
  out << "\n";
  for (const auto& row : rows) {
    out << row.t << ',' << row.mean.real() << ',' << row.mean.imag() << ','
        << row.stderr_re << ',' << row.stderr_im << ',' << row.n_samples << ','
        << row.lambda_att << ',' << row.q_att;
    if (with_ratio) {
      out << ',';
      if (row.ratio.has_value()) {
        out << *row.ratio;
      } else {
        out << "nan";
      }
    }
    out << "\n";
  }
  return out.str();
}

std::filesystem::path resolve_relative(const ExperimentConfig& cfg,
                                       const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() ? path : cfg.base_dir / path;
}

Hamiltonian build_hamiltonian(const ExperimentConfig& cfg,
                              std::optional<double> t_final_override = {}) {
  if (cfg.source == "ising2d") {
    if (cfg.field == "adiabatic") {
      return build_ising2d_adiabatic(cfg.rows, cfg.cols, cfg.h_f,
                                     t_final_override.value_or(cfg.t_final),
                                     cfg.periodic);
    }
    return build_ising2d(cfg.rows, cfg.cols, cfg.h, cfg.periodic);
  }
  if (cfg.source == "pauli") {
    return Hamiltonian::from_pauli_file(resolve_relative(cfg, cfg.path));
  }
  return jordan_wigner(FermionTermSet::from_file(resolve_relative(cfg, cfg.path)));
}

State resolve_initial(const ExperimentConfig& cfg, int n_qubits) {
  if (cfg.initial_state.empty()) {
    return State::all_zeros(n_qubits);
  }
  try {
    return State::basis_state(n_qubits, cfg.initial_state);
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(std::string("config field 'run.initial_state': ") +
                             err.what());
  }
}

bool is_loschmidt(const ExperimentConfig& cfg) {
  return cfg.observable == "loschmidt";
}

// Resolves the observable string to a weighted Pauli sum. "energy" depends
// on the evaluation time for time-dependent coefficients.
ObservableSum resolve_observable(const ExperimentConfig& cfg,
                                 const Hamiltonian& h, double t) {
  const int n = h.n_qubits();
  if (cfg.observable == "site_average_z") {
    ObservableSum sum;
    sum.reserve(static_cast<std::size_t>(n));
    const double w = 1.0 / static_cast<double>(n);
    for (int q = 0; q < n; ++q) {
      sum.push_back({w, PauliString::single(n, q, 'Z')});
    }
    return sum;
  }
  if (cfg.observable == "energy") {
    ObservableSum sum;
    sum.reserve(h.n_terms());
    for (const auto& term : h.terms()) {
      sum.push_back({term.coefficient.value(t), term.op});
    }
    return sum;
  }
  try {
    PauliString op = PauliString::parse(cfg.observable);
    if (op.n_qubits() != n) {
      throw std::invalid_argument("length differs from the register size");
    }
    return {{1.0, op}};
  } catch (const std::invalid_argument& err) {
    throw std::runtime_error(std::string("config field 'run.observable': ") +
                             err.what());
  }
}

std::vector<double> resolve_noise_rates(const ExperimentConfig& cfg,
                                        std::size_t n_terms) {
  if (!cfg.noise_rates.empty()) {
    if (cfg.noise_rates.size() != n_terms) {
      throw std::runtime_error(
          "config field 'noise.rates': size differs from term count");
    }
    return cfg.noise_rates;
  }
  return std::vector<double>(n_terms, cfg.noise_r);
}

std::optional<NoiseModel> resolve_noise(const ExperimentConfig& cfg,
                                        std::size_t n_terms) {
  if (!cfg.noise_enabled) return std::nullopt;
  NoiseModel model;
  model.rates = resolve_noise_rates(cfg, n_terms);
  model.mode = cfg.noise_mode == "deterministic"
                   ? NoiseModel::Mode::kDeterministicAttenuation
                   : NoiseModel::Mode::kStochasticDepolarizing;
  model.mitigate = cfg.mitigate;
  model.validate(n_terms);
  return model;
}

AngleAssignment resolve_angles(const ExperimentConfig& cfg,
                               const Hamiltonian& h) {
  const std::size_t n_terms = h.n_terms();
  if (cfg.angle_mode == "uniform") {
    return AngleAssignment::uniform(n_terms, cfg.tau);
  }
  if (cfg.angle_mode == "explicit") {
    if (cfg.taus.size() != n_terms) {
      throw std::runtime_error(
          "config field 'angles.values': size differs from term count");
    }
    return AngleAssignment(cfg.taus);
  }
  return optimal_angles(resolve_noise_rates(cfg, n_terms), AngleMethod::kSmallR,
                        cfg.floor_angle);
}

// Background selector: "none", or a letter pattern such as "ZZ" selecting
// every term whose multiset of non-identity letters matches.
std::vector<std::size_t> resolve_background(const ExperimentConfig& cfg,
                                            const Hamiltonian& h) {
  if (cfg.background == "none" || cfg.background.empty()) return {};
  std::string pattern = cfg.background;
  std::sort(pattern.begin(), pattern.end());
  for (char c : pattern) {
    if (c != 'X' && c != 'Y' && c != 'Z') {
      throw std::runtime_error(
          "config field 'background.pattern': must be \"none\" or letters XYZ");
    }
  }
  std::vector<std::size_t> selected;
  for (std::size_t n = 0; n < h.n_terms(); ++n) {
    std::string letters;
    for (int q : h.term(n).op.support()) {
      letters.push_back(h.term(n).op.letter(q));
    }
    std::sort(letters.begin(), letters.end());
    if (letters == pattern) selected.push_back(n);
  }
  if (selected.empty()) {
    throw std::runtime_error(
        "config field 'background.pattern': no term matches pattern");
  }
  return selected;
}

void require_samples(const ExperimentConfig& cfg) {
  if (cfg.n_samples < 1) {
    throw std::runtime_error(
        "config field 'run.n_samples': must be >= 1 for estimator commands");
  }
}

double exact_observable_value(const State& psi, const ObservableSum& obs) {
  double value = 0.0;
  for (const auto& [w, op] : obs) {
    value += w * matrix_element(psi, op, psi).real();
  }
  return value;
}

std::vector<ResultRow> run_exact_series(const ExperimentConfig& cfg) {
  const Hamiltonian h = build_hamiltonian(cfg);
  const State initial = resolve_initial(cfg, h.n_qubits());
  const bool loschmidt = is_loschmidt(cfg);
  std::vector<ResultRow> rows;
  for (double t : cfg.times) {
    const State psi = h.is_constant() ? exact_evolve(h, t, initial)
                                      : exact_evolve_td(h, t, initial);
    ResultRow row{};
    row.t = t;
    if (loschmidt) {
      row.mean = inner_product(initial, psi);
      row.ratio = row.mean.real() != 0.0
                      ? std::optional<double>(row.mean.imag() / row.mean.real())
                      : std::nullopt;
    } else {
      row.mean = exact_observable_value(psi, resolve_observable(cfg, h, t));
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<ResultRow> run_trotter_series(const ExperimentConfig& cfg) {
  if (!(cfg.trotter_step > 0.0)) {
    throw std::runtime_error(
        "config field 'run.trotter_step': must be positive for trotter");
  }
  const Hamiltonian h = build_hamiltonian(cfg);
  const State initial = resolve_initial(cfg, h.n_qubits());
  const bool loschmidt = is_loschmidt(cfg);
  std::vector<ResultRow> rows;
  for (double t : cfg.times) {
    const State psi = trotter_evolve(h, t, cfg.trotter_step, initial);
    ResultRow row{};
    row.t = t;
    if (loschmidt) {
      row.mean = inner_product(initial, psi);
    } else {
      row.mean = exact_observable_value(psi, resolve_observable(cfg, h, t));
    }
    rows.push_back(row);
  }
  return rows;
}

ResultRow row_from_result(double t, const EstimatorResult& result) {
  ResultRow row{};
  row.t = t;
  row.mean = result.mean;
  row.stderr_re = result.stderr_re;
  row.stderr_im = result.stderr_im;
  row.n_samples = result.n_samples;
  row.lambda_att = result.report.lambda_att;
  row.q_att = result.report.q_att;
  return row;
}

std::vector<ResultRow> run_evolve_series(const ExperimentConfig& cfg,
                                         int threads) {
  require_samples(cfg);
  const Hamiltonian h = build_hamiltonian(cfg);
  const State initial = resolve_initial(cfg, h.n_qubits());
  const AngleAssignment angles = resolve_angles(cfg, h);
  const auto noise = resolve_noise(cfg, h.n_terms());
  const auto background = resolve_background(cfg, h);
  const bool loschmidt = is_loschmidt(cfg);
  std::vector<ResultRow> rows;
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    const double t = cfg.times[i];
    EstimatorOptions options;
    options.n_samples = cfg.n_samples;
    options.master_seed = derive_stream_seed(cfg.seed, i);
    options.n_threads = threads;
    options.noise = noise.has_value() ? &*noise : nullptr;
    options.background = background.empty() ? nullptr : &background;
    EstimatorResult result =
        loschmidt
            ? estimate_loschmidt(h, t, initial, angles, options)
            : estimate_observable_sum(h, resolve_observable(cfg, h, t), t,
                                      initial, angles, options);
    ResultRow row = row_from_result(t, result);
    if (loschmidt) {
      try {
        row.ratio = ratio_R(result);
      } catch (const std::domain_error&) {
        row.ratio = std::nullopt;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<ResultRow> run_adiabatic_series(const ExperimentConfig& cfg,
                                            int threads) {
  if (cfg.source != "ising2d" || cfg.field != "adiabatic") {
    throw std::runtime_error(
        "adiabatic command requires hamiltonian.source = \"ising2d\" with "
        "field = \"adiabatic\"");
  }
  std::vector<ResultRow> rows;
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    const double t_final = cfg.times[i];
    if (!(t_final > 0.0)) {
      throw std::runtime_error(
          "config field 'run.times': adiabatic ramp lengths must be > 0");
    }
    const Hamiltonian h = build_hamiltonian(cfg, t_final);
    const State initial = resolve_initial(cfg, h.n_qubits());
    const double sites = static_cast<double>(h.n_qubits());
    ResultRow row{};
    if (cfg.method == "exact") {
      const State psi = exact_evolve_td(h, t_final, initial);
      ObservableSum energy;
      for (const auto& term : h.terms()) {
        energy.push_back({term.coefficient.value(t_final), term.op});
      }
      row.t = t_final;
      row.mean = exact_observable_value(psi, energy) / sites;
    } else {
      require_samples(cfg);
      const AngleAssignment angles = resolve_angles(cfg, h);
      const auto noise = resolve_noise(cfg, h.n_terms());
      const auto background = resolve_background(cfg, h);
      EstimatorOptions options;
      options.n_samples = cfg.n_samples;
      options.master_seed = derive_stream_seed(cfg.seed, i);
      options.n_threads = threads;
      options.noise = noise.has_value() ? &*noise : nullptr;
      options.background = background.empty() ? nullptr : &background;
      EstimatorResult result = estimate_energy(h, t_final, initial, angles, options);
      row = row_from_result(t_final, result);
      row.mean /= sites;
      row.stderr_re /= sites;
      row.stderr_im /= sites;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string run_analyze_report(const ExperimentConfig& cfg,
                               const std::string& command) {
  const Hamiltonian h = build_hamiltonian(cfg);
  const AngleAssignment angles = resolve_angles(cfg, h);
  const auto noise = resolve_noise(cfg, h.n_terms());
  const auto background = resolve_background(cfg, h);
  const double t = cfg.times.back();
  const AttenuationReport report = attenuation_report(
      h, t, angles, noise.has_value() ? &*noise : nullptr,
      background.empty() ? nullptr : &background);
  const double r = cfg.noise_enabled ? cfg.noise_r : 0.0;

  nlohmann::json j;
  j["provenance"]["version"] = std::string(kVersion);
  j["provenance"]["command"] = command;
  j["provenance"]["config_hash"] = cfg.config_hash();
  j["provenance"]["seed"] = cfg.seed;
  j["t"] = t;
  j["n_terms"] = h.n_terms();
  double sum_abs = 0.0;
  for (double z : h.z_values(t)) sum_abs += t > 0.0 ? z / t : 0.0;
  if (h.is_constant()) sum_abs = h.sum_abs_coefficients();
  j["sum_abs_coefficients"] = sum_abs;
  j["angles"] = angles.values();
  j["lambda_att"] = report.lambda_att;
  j["q_att"] = report.q_att;
  j["expected_gates_per_tetris"] = report.expected_gates;
  j["expected_gates_per_pair"] = 2.0 * report.expected_gates;
  j["epsilon"] = cfg.epsilon;
  j["trotter_error_coefficient"] = cfg.trotter_c;
  j["noise_r"] = r;
  const ShotEstimate shots = shot_estimate(h, t, cfg.epsilon, cfg.trotter_c, r);
  j["m_tetris"] = shots.m_tetris;
  j["m_trotter"] = shots.m_trotter;
  j["crossover_epsilon"] = shots.crossover;
  return j.dump(2) + "\n";
}

std::string run_sample_dump(const ExperimentConfig& cfg,
                            const std::string& command) {
  const Hamiltonian h = build_hamiltonian(cfg);
  const AngleAssignment angles = resolve_angles(cfg, h);
  const auto background = resolve_background(cfg, h);
  const double t = cfg.times.back();
  TetrisSampler sampler(h, t, angles,
                        background.empty() ? nullptr : &background);
  RngStream rng(derive_stream_seed(cfg.seed, 0));
  const Tetris tetris = sampler.draw(rng);
  std::ostringstream out;
  out << provenance_header(cfg, command);
  write_tetris(out, tetris, angles, cfg.seed);
  return out.str();
}

}  // namespace

std::filesystem::path run_command(const std::string& command,
                                  const std::filesystem::path& config_path,
                                  const RunOverrides& overrides) {
  ExperimentConfig cfg = ExperimentConfig::load(config_path);
  if (overrides.seed.has_value()) cfg.seed = *overrides.seed;
  if (overrides.threads.has_value()) cfg.threads = *overrides.threads;
  const int threads = cfg.threads;
  // A config-file output path resolves against the config's directory; a
  // command-line override resolves against the working directory.
  std::filesystem::path out_path;
  if (overrides.out_path.has_value()) {
    cfg.out_path = *overrides.out_path;
    out_path = *overrides.out_path;
  } else {
    out_path = resolve_relative(cfg, cfg.out_path);
  }

  std::string content;
  if (command == "exact") {
    content = render_csv(cfg, command, run_exact_series(cfg), is_loschmidt(cfg));
  } else if (command == "evolve") {
    content =
        render_csv(cfg, command, run_evolve_series(cfg, threads), is_loschmidt(cfg));
  } else if (command == "trotter") {
    content = render_csv(cfg, command, run_trotter_series(cfg), false);
  } else if (command == "adiabatic") {
    content = render_csv(cfg, command, run_adiabatic_series(cfg, threads), false);
  } else if (command == "loschmidt") {
    ExperimentConfig lcfg = cfg;
    lcfg.observable = "loschmidt";
    content = render_csv(lcfg, command, run_evolve_series(lcfg, threads), true);
  } else if (command == "analyze") {
    content = run_analyze_report(cfg, command);
  } else if (command == "sample") {
    content = run_sample_dump(cfg, command);
  } else {
    throw std::invalid_argument("unknown command: " + command);
  }
  write_file_atomically(out_path, content);
  return out_path;
}

}  // namespace tetrisim
