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

#include "tetrisim/mixing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tetrisim {

MixingParams mixing_params(double tau_prime, double tau) {
  constexpr double kHalfPi = std::numbers::pi / 2.0;
  const double at = std::abs(tau);
  const double atp = std::abs(tau_prime);
  if (at > kHalfPi + 1e-15) {
    throw std::invalid_argument("|tau| must not exceed pi/2");
  }
  if (atp > at) {
    throw std::invalid_argument("|tau'| must not exceed |tau|");
  }
  if (tau_prime != 0.0 && tau != 0.0 &&
      std::signbit(tau_prime) != std::signbit(tau)) {
    throw std::invalid_argument("tau' and tau must have the same sign");
  }
  if (tau_prime == 0.0) {
    return {0.0, tau, tau_prime, 1.0};
  }
  if (atp == at) {
    return {1.0, tau, tau_prime, 1.0};
  }
  const double tp = std::tan(atp);
  const double p = tp / (std::sin(at) + (1.0 - std::cos(at)) * tp);
  const double lambda = p * std::sin(at) / std::sin(atp);
  return {p, tau, tau_prime, lambda};
}

std::pair<std::complex<double>, std::complex<double>> subset_identity_check(
    const std::vector<PauliString>& gates, double tau_prime,
    const PauliString& observable, const State& initial, double tau) {
  const std::size_t g = gates.size();
  if (g > 5) {
    throw std::invalid_argument("subset enumeration capped at 5 gates");
  }
  for (const auto& gate : gates) {
    if (gate.n_qubits() != initial.n_qubits()) {
      throw std::invalid_argument("gate and state sizes differ");
    }
  }
  const MixingParams mix = mixing_params(tau_prime, tau);

  // psi_S: the tau-realized circuit with the gates in S deleted.
  const std::size_t n_subsets = std::size_t{1} << g;
  std::vector<State> subset_states;
  std::vector<double> weights(n_subsets);
  subset_states.reserve(n_subsets);
  for (std::size_t mask = 0; mask < n_subsets; ++mask) {
    State psi = initial;
    int deleted = 0;
    for (std::size_t i = 0; i < g; ++i) {
      if (mask & (std::size_t{1} << i)) {
        ++deleted;
        continue;
      }
      apply_pauli_rotation(psi, gates[i], tau);
    }
    subset_states.push_back(std::move(psi));
    weights[mask] = std::pow(1.0 - mix.p, deleted) *
                    std::pow(mix.p, static_cast<double>(g) - deleted);
  }

  std::complex<double> lhs(0.0, 0.0);
  for (std::size_t bra_mask = 0; bra_mask < n_subsets; ++bra_mask) {
    for (std::size_t ket_mask = 0; ket_mask < n_subsets; ++ket_mask) {
      lhs += weights[bra_mask] * weights[ket_mask] *
             matrix_element(subset_states[bra_mask], observable,
                            subset_states[ket_mask]);
    }
  }

  State exact = initial;
  for (const auto& gate : gates) {
    apply_pauli_rotation(exact, gate, tau_prime);
  }
  const std::complex<double> rhs =
      std::pow(mix.lambda, 2.0 * static_cast<double>(g)) *
      matrix_element(exact, observable, exact);
  return {lhs, rhs};
}

}  // namespace tetrisim
