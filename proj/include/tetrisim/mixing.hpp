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
#include <utility>
#include <vector>

#include "tetrisim/pauli.hpp"
#include "tetrisim/state.hpp"

namespace tetrisim {

/// Parameters of the gate-mixing identity
///   (1 - p) + p e^{i tau O} = lambda e^{i tau' O}   for any O with O^2 = I,
/// i.e. a target angle tau' realized by firing the larger angle tau with
/// probability p, at the cost of an attenuation lambda.
struct MixingParams {
  double p;          // firing probability in [0, 1]
  double tau;        // realized gate angle
  double tau_prime;  // effective (target) angle
  double lambda;     // attenuation in (0, 1]
};

/// Solves the mixing identity for a target angle:
///   p = tan(tau') / (sin(tau) + (1 - cos(tau)) tan(tau')),
///   lambda = p sin(tau) / sin(tau'),
/// with lambda = 1 at tau' = 0 by continuity. Angles must satisfy
/// 0 <= |tau'| <= |tau| <= pi/2 with matching signs (the negative-angle case
/// mirrors the positive one).
MixingParams mixing_params(double tau_prime, double tau);

/// Exhaustive verification oracle for the subset form of the mixing
/// identity on a whole circuit: for G gates e^{i tau' P_g} applied in order
/// to `initial`, enumerates all pairs of deletion subsets (S, S') of the
/// tau-realized circuit and returns
///   lhs = sum_{S,S'} (1-p)^{|S|+|S'|} p^{2G-|S|-|S'|} <psi_S'|M|psi_S>,
///   rhs = lambda^{2G} <psi|M|psi>.
/// Gate count is capped at 5 (the enumeration is exponential); this is a
/// verification path, not a production sampler.
std::pair<std::complex<double>, std::complex<double>> subset_identity_check(
    const std::vector<PauliString>& gates, double tau_prime,
    const PauliString& observable, const State& initial, double tau);

}  // namespace tetrisim
