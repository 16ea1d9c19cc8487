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

#include "tetrisim/hamiltonian.hpp"
#include "tetrisim/state.hpp"

namespace tetrisim {

/// Largest register handled by the dense eigendecomposition path.
inline constexpr int kDenseEvolveQubitLimit = 10;
/// Largest register handled by the Lanczos propagator.
inline constexpr int kKrylovEvolveQubitLimit = 14;

/// e^{+i t H} |s> for a constant Hamiltonian. Dense eigendecomposition up to
/// kDenseEvolveQubitLimit qubits, Lanczos propagation (tolerance 1e-10)
/// beyond that, up to kKrylovEvolveQubitLimit. Norm error stays below 1e-9.
State exact_evolve(const Hamiltonian& h, double t, const State& s);

/// Lanczos path of exact_evolve, callable directly at any size within the
/// Krylov limit (the dense and Krylov routes cross-check each other).
State exact_evolve_krylov(const Hamiltonian& h, double t, const State& s);

/// Time-ordered evolution under H(t): integrates d|psi>/dt = +i H(t) |psi>
/// with an adaptive embedded Runge-Kutta scheme at relative tolerance 1e-10.
State exact_evolve_td(const Hamiltonian& h, double t, const State& s);

/// First-order product-formula baseline: applies
/// (e^{i tau c_1 O_1} ... e^{i tau c_N O_N})^{t/tau} in term order, with one
/// shortened final sweep when t is not a multiple of tau. Constant
/// Hamiltonians only; tau must be positive.
State trotter_evolve(const Hamiltonian& h, double t, double tau,
                     const State& s);

}  // namespace tetrisim
