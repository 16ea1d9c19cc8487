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
#include <vector>

#include "tetrisim/estimator.hpp"
#include "tetrisim/pauli.hpp"
#include "tetrisim/state.hpp"

namespace tetrisim {

/// A circuit over {H, S, CX, T}. T gates are the only non-Clifford content;
/// the gadget estimator below replaces each T by a Z rotation or nothing,
/// each with probability 1/2 (T = e^{i pi/8} e^{-i pi/8 Z}, so the fired
/// branch is e^{-i pi/4 Z}, an S gate up to a global phase) and divides the
/// averaged result by cos(pi/8) per replaced gate and per circuit copy.
struct GateCircuit {
  enum class Kind : std::uint8_t { kH, kS, kT, kCX };
  struct Gate {
    Kind kind;
    int q0;
    int q1 = -1;  // CX target; unused otherwise
  };

  int n_qubits = 0;
  std::vector<Gate> gates;

  /// Parses the circuit text format: one gate per line, `H q`, `S q`, `T q`
  /// or `CX q1 q2`; `#` comments and blank lines allowed. The register size
  /// is the largest index used plus one.
  static GateCircuit parse(std::istream& in);

  std::size_t t_count() const;
  void validate() const;
};

/// Applies the circuit exactly (T included) on the statevector.
void apply_circuit(State& s, const GateCircuit& circuit);

enum class TGadgetMode {
  /// Bra and ket copies sampled independently; estimates the expectation
  /// <psi|M|psi> with divisor cos(pi/8)^(2 G_T).
  kTwoCopy,
  /// Single sampled copy; estimates the transition amplitude
  /// <initial|M U|initial> with divisor cos(pi/8)^(G_T).
  kSingleCopy,
};

/// Monte Carlo estimate over T-gate replacements, starting from |0...0>.
/// Sample i uses the stream derived from (master_seed, i); results are
/// bit-identical for any thread count. Global phases are tracked exactly.
EstimatorResult t_gadget_estimate(const GateCircuit& circuit,
                                  const PauliString& observable,
                                  std::size_t n_samples,
                                  std::uint64_t master_seed,
                                  TGadgetMode mode = TGadgetMode::kTwoCopy,
                                  int n_threads = 1);

}  // namespace tetrisim
