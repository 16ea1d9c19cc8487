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

#include "tetrisim/clifford_t.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "tetrisim/rng.hpp"

namespace tetrisim {

namespace {

using Complex = std::complex<double>;

constexpr double kQuarterPi = std::numbers::pi / 4.0;
constexpr double kEighthPi = std::numbers::pi / 8.0;

std::string strip_comment_and_trim(const std::string& line) {
  std::string s = line;
  if (const auto pos = s.find('#'); pos != std::string::npos) {
    s.erase(pos);
  }
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

void apply_h_gate(State& s, int q) {
  auto& a = s.amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (b & bit) continue;
    const Complex lo = a[b];
    const Complex hi = a[b | bit];
    a[b] = inv_sqrt2 * (lo + hi);
    a[b | bit] = inv_sqrt2 * (lo - hi);
  }
}

void apply_phase_gate(State& s, int q, Complex phase) {
  auto& a = s.amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t b = 0; b < a.size(); ++b) {
    if (b & bit) a[b] *= phase;
  }
}

void apply_cx_gate(State& s, int control, int target) {
  auto& a = s.amplitudes();
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t b = 0; b < a.size(); ++b) {
    if ((b & cbit) && !(b & tbit)) {
      std::swap(a[b], a[b | tbit]);
    }
  }
}

// Sampled circuit application: each T becomes the global phase e^{i pi/8}
// (tracked separately) and, on a fair coin, the rotation e^{-i pi/4 Z_q}.
Complex apply_circuit_sampled(State& s, const GateCircuit& circuit,
                              RngStream& rng) {
  Complex phase(1.0, 0.0);
  const Complex t_phase = std::polar(1.0, kEighthPi);
  for (const auto& gate : circuit.gates) {
    switch (gate.kind) {
      case GateCircuit::Kind::kH:
        apply_h_gate(s, gate.q0);
        break;
      case GateCircuit::Kind::kS:
        apply_phase_gate(s, gate.q0, Complex(0.0, 1.0));
        break;
      case GateCircuit::Kind::kCX:
        apply_cx_gate(s, gate.q0, gate.q1);
        break;
      case GateCircuit::Kind::kT:
        phase *= t_phase;
        if (rng.uniform01() < 0.5) {
          apply_pauli_rotation(
              s, PauliString::single(s.n_qubits(), gate.q0, 'Z'), -kQuarterPi);
        }
        break;
    }
  }
  return phase;
}

}  // namespace

GateCircuit GateCircuit::parse(std::istream& in) {
  GateCircuit circuit;
  int max_index = -1;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string body = strip_comment_and_trim(line);
    if (body.empty()) continue;
    std::istringstream fields(body);
    std::string name;
    fields >> name;
    const auto fail = [&](const std::string& what) -> std::runtime_error {
      return std::runtime_error("line " + std::to_string(line_number) + ": " +
                                what);
    };
    Gate gate{};
    std::string extra;
    if (name == "H" || name == "S" || name == "T") {
      if (!(fields >> gate.q0) || (fields >> extra)) {
        throw fail("expected '" + name + " <qubit>'");
      }
      gate.kind = name == "H" ? Kind::kH : (name == "S" ? Kind::kS : Kind::kT);
      if (gate.q0 < 0) throw fail("qubit index must be >= 0");
      max_index = std::max(max_index, gate.q0);
    } else if (name == "CX") {
      if (!(fields >> gate.q0 >> gate.q1) || (fields >> extra)) {
        throw fail("expected 'CX <control> <target>'");
      }
      gate.kind = Kind::kCX;
      if (gate.q0 < 0 || gate.q1 < 0) throw fail("qubit index must be >= 0");
      if (gate.q0 == gate.q1) throw fail("CX control equals target");
      max_index = std::max({max_index, gate.q0, gate.q1});
    } else {
      throw fail("unknown gate '" + name + "' (expected H, S, T or CX)");
    }
    circuit.gates.push_back(gate);
  }
  if (max_index < 0) {
    throw std::runtime_error("circuit file contains no gates");
  }
  circuit.n_qubits = max_index + 1;
  return circuit;
}

std::size_t GateCircuit::t_count() const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(),
                    [](const Gate& g) { return g.kind == Kind::kT; }));
}

void GateCircuit::validate() const {
  if (n_qubits < 1) {
    throw std::invalid_argument("circuit must act on at least one qubit");
  }
  for (const auto& gate : gates) {
    if (gate.q0 < 0 || gate.q0 >= n_qubits ||
        (gate.kind == Kind::kCX &&
         (gate.q1 < 0 || gate.q1 >= n_qubits || gate.q1 == gate.q0))) {
      throw std::invalid_argument("gate qubit index out of range");
    }
  }
}

void apply_circuit(State& s, const GateCircuit& circuit) {
  circuit.validate();
  if (s.n_qubits() != circuit.n_qubits) {
    throw std::invalid_argument("state and circuit sizes differ");
  }
  const Complex t_diag = std::polar(1.0, kQuarterPi);
  for (const auto& gate : circuit.gates) {
    switch (gate.kind) {
      case GateCircuit::Kind::kH:
        apply_h_gate(s, gate.q0);
        break;
      case GateCircuit::Kind::kS:
        apply_phase_gate(s, gate.q0, Complex(0.0, 1.0));
        break;
      case GateCircuit::Kind::kT:
        apply_phase_gate(s, gate.q0, t_diag);
        break;
      case GateCircuit::Kind::kCX:
        apply_cx_gate(s, gate.q0, gate.q1);
        break;
    }
  }
}

EstimatorResult t_gadget_estimate(const GateCircuit& circuit,
                                  const PauliString& observable,
                                  std::size_t n_samples,
                                  std::uint64_t master_seed, TGadgetMode mode,
                                  int n_threads) {
  circuit.validate();
  if (observable.n_qubits() != circuit.n_qubits) {
    throw std::invalid_argument("observable size differs from circuit");
  }
  if (n_samples < 1) {
    throw std::invalid_argument("t_gadget_estimate needs n_samples >= 1");
  }
  const State initial = State::all_zeros(circuit.n_qubits);
  const std::size_t g_t = circuit.t_count();
  const int copies = mode == TGadgetMode::kTwoCopy ? 2 : 1;
  const double divisor =
      std::pow(std::cos(kEighthPi), static_cast<double>(copies * g_t));

  std::vector<Complex> samples(n_samples);
  std::vector<double> gates(n_samples);
  const auto run_sample = [&](std::size_t i) {
    RngStream rng(derive_stream_seed(master_seed, i));
    State ket = initial;
    const Complex ket_phase = apply_circuit_sampled(ket, circuit, rng);
    Complex x;
    if (mode == TGadgetMode::kTwoCopy) {
      State bra = initial;
      const Complex bra_phase = apply_circuit_sampled(bra, circuit, rng);
      x = std::conj(bra_phase) * ket_phase * matrix_element(bra, observable, ket);
    } else {
      x = ket_phase * matrix_element(initial, observable, ket);
    }
    samples[i] = x / divisor;
    gates[i] = static_cast<double>(circuit.gates.size());
  };

  unsigned threads = n_threads > 0
                         ? static_cast<unsigned>(n_threads)
                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_samples));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n_samples; ++i) run_sample(i);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n_samples; i += threads) run_sample(i);
      });
    }
    for (auto& worker : pool) worker.join();
  }

  Complex sum(0.0, 0.0);
  for (const Complex& x : samples) sum += x;
  const Complex mean = sum / static_cast<double>(n_samples);
  double var_re = 0.0;
  double var_im = 0.0;
  for (const Complex& x : samples) {
    var_re += (x.real() - mean.real()) * (x.real() - mean.real());
    var_im += (x.imag() - mean.imag()) * (x.imag() - mean.imag());
  }
  EstimatorResult result;
  result.mean = mean;
  if (n_samples > 1) {
    const double norm =
        static_cast<double>(n_samples) * static_cast<double>(n_samples - 1);
    result.stderr_re = std::sqrt(var_re / norm);
    result.stderr_im = std::sqrt(var_im / norm);
  }
  result.n_samples = n_samples;
  result.mean_gates = static_cast<double>(circuit.gates.size());
  result.report.lambda_att = divisor;
  result.report.q_att = 1.0;
  result.report.expected_gates = static_cast<double>(circuit.gates.size());
  return result;
}

}  // namespace tetrisim
