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

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tetrisim/pauli.hpp"

namespace tetrisim {

/// Dense complex statevector over n qubits. Qubit 0 is the least significant
/// bit of the amplitude index, so basis index b assigns bit (b >> q) & 1 to
/// qubit q. Plain value semantics: copy freely, mutate through the kernels
/// below. Global phases are physical here and never normalized away.
class State {
 public:
  explicit State(int n_qubits);

  /// Computational-basis state from a bit string; character position q is
  /// qubit q ('0' or '1'). Throws when the length differs from n_qubits.
  static State basis_state(int n_qubits, std::string_view bits);

  /// |0...0>, the Z=+1 product state.
  static State all_zeros(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }

  std::complex<double>& amplitude(std::size_t index) { return amplitudes_[index]; }
  const std::complex<double>& amplitude(std::size_t index) const {
    return amplitudes_[index];
  }
  std::vector<std::complex<double>>& amplitudes() { return amplitudes_; }
  const std::vector<std::complex<double>>& amplitudes() const {
    return amplitudes_;
  }

  double norm() const;

 private:
  int n_qubits_;
  std::vector<std::complex<double>> amplitudes_;
};

/// |s> -> P|s>, in place.
void apply_pauli(State& s, const PauliString& p);

/// |s> -> e^{i theta P}|s> = cos(theta)|s> + i sin(theta) P|s>, in place,
/// without materializing the operator.
void apply_pauli_rotation(State& s, const PauliString& p, double theta);

/// dst += coefficient * P * src. Sizes must match (used for H|psi> products).
void accumulate_pauli(State& dst, const State& src, const PauliString& p,
                      double coefficient);

/// <bra|ket> with conjugation on bra.
std::complex<double> inner_product(const State& bra, const State& ket);

/// <bra|P|ket>, single pass, no temporaries.
std::complex<double> matrix_element(const State& bra, const PauliString& p,
                                    const State& ket);

/// Re <s|P|s> (exact up to roundoff for Hermitian P).
double expectation(const State& s, const PauliString& p);

}  // namespace tetrisim
