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

#include <Eigen/Dense>

#include "tetrisim/hamiltonian.hpp"
#include "tetrisim/pauli.hpp"

namespace tetrisim {

/// 2^n x 2^n matrix of a Pauli string (small n only; intended for the dense
/// evolution path and verification).
Eigen::MatrixXcd pauli_matrix(const PauliString& p);

/// Dense H(t) = sum_n c_n(t) * O_n.
Eigen::MatrixXcd hamiltonian_matrix(const Hamiltonian& h, double t = 0.0);

}  // namespace tetrisim
