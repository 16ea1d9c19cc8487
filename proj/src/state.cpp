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

#include "tetrisim/state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace tetrisim {

namespace {

using Complex = std::complex<double>;

// Phase of P acting on basis state |b>: P|b> = phase(b) |b ^ x>, with
// phase(b) = i^{#Y} * (-1)^{popcount(b & z)}.
inline Complex basis_phase(std::uint64_t b, std::uint64_t z, Complex i_pow_y) {
  return (std::popcount(b & z) & 1) ? -i_pow_y : i_pow_y;
}

inline Complex i_to_the(int n) {
  constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return table[n & 3];
}

void check_match(const State& s, const PauliString& p) {
  if (s.n_qubits() != p.n_qubits()) {
    throw std::invalid_argument("state and Pauli string sizes differ");
  }
}

}  // namespace

State::State(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 26) {
    throw std::invalid_argument("state size must be in [1, 26] qubits");
  }
  amplitudes_.assign(std::size_t{1} << n_qubits, Complex(0.0, 0.0));
}

State State::basis_state(int n_qubits, std::string_view bits) {
  if (static_cast<int>(bits.size()) != n_qubits) {
    throw std::invalid_argument("bit string length differs from qubit count");
  }
  std::size_t index = 0;
  for (int q = 0; q < n_qubits; ++q) {
    const char c = bits[static_cast<std::size_t>(q)];
    if (c == '1') {
      index |= std::size_t{1} << q;
    } else if (c != '0') {
      throw std::invalid_argument("bit string must contain only 0 and 1");
    }
  }
  State s(n_qubits);
  s.amplitudes_[index] = Complex(1.0, 0.0);
  return s;
}

State State::all_zeros(int n_qubits) {
  State s(n_qubits);
  s.amplitudes_[0] = Complex(1.0, 0.0);
  return s;
}

double State::norm() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) {
    total += std::norm(a);
  }
  return std::sqrt(total);
}

void apply_pauli(State& s, const PauliString& p) {
  check_match(s, p);
  const std::uint64_t x = p.x_bits();
  const std::uint64_t z = p.z_bits();
  const Complex iy = i_to_the(std::popcount(x & z));
  auto& a = s.amplitudes();
  const std::size_t dim = a.size();
  if (x == 0) {
    for (std::size_t b = 0; b < dim; ++b) {
      a[b] *= basis_phase(b, z, iy);
    }
    return;
  }
  const std::uint64_t hi = std::uint64_t{1} << (63 - std::countl_zero(x));
  for (std::size_t b = 0; b < dim; ++b) {
    if (b & hi) continue;
    const std::size_t pb = b ^ x;
    const Complex ab = a[b];
    const Complex apb = a[pb];
    a[b] = basis_phase(pb, z, iy) * apb;
    a[pb] = basis_phase(b, z, iy) * ab;
  }
}

void apply_pauli_rotation(State& s, const PauliString& p, double theta) {
  check_match(s, p);
  const std::uint64_t x = p.x_bits();
  const std::uint64_t z = p.z_bits();
  auto& a = s.amplitudes();
  const std::size_t dim = a.size();
  if (x == 0) {
    // Diagonal string: each amplitude picks up e^{+-i theta}.
    const Complex plus = std::polar(1.0, theta);
    const Complex minus = std::polar(1.0, -theta);
    for (std::size_t b = 0; b < dim; ++b) {
      a[b] *= (std::popcount(b & z) & 1) ? minus : plus;
    }
    return;
  }
  const double c = std::cos(theta);
  const Complex is(0.0, std::sin(theta));
  const Complex iy = i_to_the(std::popcount(x & z));
  const std::uint64_t hi = std::uint64_t{1} << (63 - std::countl_zero(x));
  for (std::size_t b = 0; b < dim; ++b) {
    if (b & hi) continue;
    const std::size_t pb = b ^ x;
    const Complex ab = a[b];
    const Complex apb = a[pb];
    a[b] = c * ab + is * basis_phase(pb, z, iy) * apb;
    a[pb] = c * apb + is * basis_phase(b, z, iy) * ab;
  }
}

void accumulate_pauli(State& dst, const State& src, const PauliString& p,
                      double coefficient) {
  check_match(src, p);
  if (dst.n_qubits() != src.n_qubits()) {
    throw std::invalid_argument("state sizes differ");
  }
  const std::uint64_t x = p.x_bits();
  const std::uint64_t z = p.z_bits();
  const Complex iy = coefficient * i_to_the(std::popcount(x & z));
  auto& d = dst.amplitudes();
  const auto& a = src.amplitudes();
  const std::size_t dim = a.size();
  for (std::size_t b = 0; b < dim; ++b) {
    d[b] += basis_phase(b ^ x, z, iy) * a[b ^ x];
  }
}

std::complex<double> inner_product(const State& bra, const State& ket) {
  if (bra.n_qubits() != ket.n_qubits()) {
    throw std::invalid_argument("state sizes differ");
  }
  Complex total(0.0, 0.0);
  const auto& b = bra.amplitudes();
  const auto& k = ket.amplitudes();
  for (std::size_t i = 0; i < b.size(); ++i) {
    total += std::conj(b[i]) * k[i];
  }
  return total;
}

std::complex<double> matrix_element(const State& bra, const PauliString& p,
                                    const State& ket) {
  check_match(ket, p);
  if (bra.n_qubits() != ket.n_qubits()) {
    throw std::invalid_argument("state sizes differ");
  }
  const std::uint64_t x = p.x_bits();
  const std::uint64_t z = p.z_bits();
  const Complex iy = i_to_the(std::popcount(x & z));
  const auto& b = bra.amplitudes();
  const auto& k = ket.amplitudes();
  Complex total(0.0, 0.0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    total += std::conj(b[i]) * basis_phase(i ^ x, z, iy) * k[i ^ x];
  }
  return total;
}

double expectation(const State& s, const PauliString& p) {
  return matrix_element(s, p, s).real();
}

}  // namespace tetrisim
