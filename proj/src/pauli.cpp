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

#include "tetrisim/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace tetrisim {

namespace {

constexpr std::complex<double> kPowersOfI[4] = {
    {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};

}  // namespace

PauliString PauliString::parse(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("Pauli string must not be empty");
  }
  if (text.size() > 64) {
    throw std::invalid_argument("Pauli string longer than 64 qubits");
  }
  PauliString p;
  p.n_qubits_ = static_cast<int>(text.size());
  for (int q = 0; q < p.n_qubits_; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[static_cast<std::size_t>(q)]) {
      case 'I':
        break;
      case 'X':
        p.x_ |= bit;
        break;
      case 'Y':
        p.x_ |= bit;
        p.z_ |= bit;
        break;
      case 'Z':
        p.z_ |= bit;
        break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli letter '") +
                                    text[static_cast<std::size_t>(q)] +
                                    "' (expected I, X, Y or Z)");
    }
  }
  return p;
}

PauliString PauliString::identity(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 64) {
    throw std::invalid_argument("n_qubits must be in [1, 64]");
  }
  PauliString p;
  p.n_qubits_ = n_qubits;
  return p;
}

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  PauliString p = identity(n_qubits);
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::invalid_argument("qubit index out of range");
  }
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (letter) {
    case 'X':
      p.x_ |= bit;
      break;
    case 'Y':
      p.x_ |= bit;
      p.z_ |= bit;
      break;
    case 'Z':
      p.z_ |= bit;
      break;
    default:
      throw std::invalid_argument("letter must be X, Y or Z");
  }
  return p;
}

PauliString PauliString::from_bits(int n_qubits, std::uint64_t x_bits,
                                   std::uint64_t z_bits) {
  PauliString p = identity(n_qubits);
  const std::uint64_t mask =
      n_qubits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_qubits) - 1;
  if ((x_bits & ~mask) != 0 || (z_bits & ~mask) != 0) {
    throw std::invalid_argument("bits set beyond n_qubits");
  }
  p.x_ = x_bits;
  p.z_ = z_bits;
  return p;
}

char PauliString::letter(int qubit) const {
  if (qubit < 0 || qubit >= n_qubits_) {
    throw std::invalid_argument("qubit index out of range");
  }
  const bool x = (x_ >> qubit) & 1;
  const bool z = (z_ >> qubit) & 1;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::string PauliString::to_string() const {
  std::string out(static_cast<std::size_t>(n_qubits_), 'I');
  for (int q = 0; q < n_qubits_; ++q) {
    out[static_cast<std::size_t>(q)] = letter(q);
  }
  return out;
}

int PauliString::weight() const {
  return std::popcount(x_ | z_);
}

std::vector<int> PauliString::support() const {
  std::vector<int> qubits;
  qubits.reserve(static_cast<std::size_t>(weight()));
  std::uint64_t rest = x_ | z_;
  while (rest != 0) {
    const int q = std::countr_zero(rest);
    qubits.push_back(q);
    rest &= rest - 1;
  }
  return qubits;
}

bool commutes(const PauliString& p, const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw std::invalid_argument("Pauli strings act on different qubit counts");
  }
  // Per qubit the letters anticommute iff x1*z2 + z1*x2 is odd.
  const std::uint64_t anti =
      (p.x_bits() & q.z_bits()) ^ (p.z_bits() & q.x_bits());
  return (std::popcount(anti) & 1) == 0;
}

std::pair<std::complex<double>, PauliString> multiply(const PauliString& p,
                                                      const PauliString& q) {
  if (p.n_qubits() != q.n_qubits()) {
    throw std::invalid_argument("Pauli strings act on different qubit counts");
  }
  // Write each string canonically as i^{#Y} X^x Z^z. Commuting Z^z1 past X^x2
  // contributes (-1)^{|z1 & x2|}, and the product's own Y count is divided
  // back out to return to the Hermitian-letter convention.
  const std::uint64_t x3 = p.x_bits() ^ q.x_bits();
  const std::uint64_t z3 = p.z_bits() ^ q.z_bits();
  int ipow = std::popcount(p.x_bits() & p.z_bits()) +
             std::popcount(q.x_bits() & q.z_bits()) -
             std::popcount(x3 & z3) +
             2 * std::popcount(p.z_bits() & q.x_bits());
  ipow = ((ipow % 4) + 4) % 4;
  return {kPowersOfI[ipow], PauliString::from_bits(p.n_qubits(), x3, z3)};
}

}  // namespace tetrisim
