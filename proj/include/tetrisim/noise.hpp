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
#include <stdexcept>
#include <vector>

namespace tetrisim {

/// Per-gate depolarizing noise applied to sampled gates. Each applied gate
/// for term n attenuates the signal by e^{-r_n} on average.
struct NoiseModel {
  enum class Mode {
    /// Damp each sample by the known mean factor q_att (sqrt(q_att) per
    /// state copy); mitigation then cancels it exactly.
    kDeterministicAttenuation,
    /// After each applied gate, with probability p_err = 1 - e^{-r_n},
    /// insert a uniformly random Pauli (identity included) on the gate's
    /// support qubits. Reproduces the e^{-r_n} mean attenuation for
    /// traceless observables.
    kStochasticDepolarizing,
  };

  std::vector<double> rates;  // r_n >= 0, one per Hamiltonian term
  Mode mode = Mode::kStochasticDepolarizing;
  bool mitigate = false;  // divide results by the known q_att

  static NoiseModel uniform(std::size_t n_terms, double r, Mode mode,
                            bool mitigate) {
    if (r < 0.0) throw std::invalid_argument("noise rate must be >= 0");
    NoiseModel model;
    model.rates.assign(n_terms, r);
    model.mode = mode;
    model.mitigate = mitigate;
    return model;
  }

  void validate(std::size_t n_terms) const {
    if (rates.size() != n_terms) {
      throw std::invalid_argument("noise model rate count differs from terms");
    }
    for (double r : rates) {
      if (r < 0.0) throw std::invalid_argument("noise rate must be >= 0");
    }
  }
};

}  // namespace tetrisim
