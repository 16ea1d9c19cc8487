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

#include "tetrisim/dense.hpp"

#include <bit>
#include <stdexcept>

namespace tetrisim {

Eigen::MatrixXcd pauli_matrix(const PauliString& p) {
  if (p.n_qubits() > 14) {
    throw std::invalid_argument("dense Pauli matrix limited to 14 qubits");
  }
  const std::size_t dim = std::size_t{1} << p.n_qubits();
  const std::uint64_t x = p.x_bits();
  const std::uint64_t z = p.z_bits();
  constexpr std::complex<double> powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> iy = powers[std::popcount(x & z) & 3];
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (std::size_t b = 0; b < dim; ++b) {
    const std::complex<double> phase =
        (std::popcount(b & z) & 1) ? -iy : iy;
    m(static_cast<Eigen::Index>(b ^ x), static_cast<Eigen::Index>(b)) = phase;
  }
  return m;
}

Eigen::MatrixXcd hamiltonian_matrix(const Hamiltonian& h, double t) {
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const auto& term : h.terms()) {
    m += term.coefficient.value(t) * pauli_matrix(term.op);
  }
  return m;
}

}  // namespace tetrisim
