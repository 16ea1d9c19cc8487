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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tetrisim {

/// Phase-free Hermitian tensor product of single-qubit Pauli operators.
///
/// Letters are stored as two bit masks with qubit q at bit q:
/// I=(x:0,z:0), X=(1,0), Y=(1,1), Z=(0,1). The i factor of Y = i*XZ is folded
/// into the application and multiplication kernels, so the represented
/// operator is exactly the Hermitian tensor product of I/X/Y/Z matrices and
/// squares to the identity.
class PauliString {
 public:
  PauliString() = default;

  /// Parses a string over {I,X,Y,Z}; one character per qubit, position q is
  /// qubit q. Throws std::invalid_argument on an empty string, a string
  /// longer than 64 qubits, or any other character.
  static PauliString parse(std::string_view text);

  /// The all-identity string on n_qubits.
  static PauliString identity(int n_qubits);

  /// Single non-identity letter ('X', 'Y' or 'Z') on one qubit.
  static PauliString single(int n_qubits, int qubit, char letter);

  /// Builds directly from bit masks (bits above n_qubits must be clear).
  static PauliString from_bits(int n_qubits, std::uint64_t x_bits,
                               std::uint64_t z_bits);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }

  char letter(int qubit) const;
  std::string to_string() const;

  bool is_identity() const { return x_ == 0 && z_ == 0; }

  /// Number of non-identity letters.
  int weight() const;

  /// Qubits carrying a non-identity letter, ascending.
  std::vector<int> support() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// True iff [P, Q] = 0. Two strings commute exactly when the number of qubit
/// positions holding distinct non-identity letters is even. Throws on
/// mismatched lengths.
bool commutes(const PauliString& p, const PauliString& q);

/// Product of two strings: P*Q = phase * R with phase in {1, i, -1, -i} and
/// R again a phase-free Hermitian string. Throws on mismatched lengths.
std::pair<std::complex<double>, PauliString> multiply(const PauliString& p,
                                                      const PauliString& q);

/// Strict ordering usable as a map key (by n_qubits, then bit masks).
struct PauliStringLess {
  bool operator()(const PauliString& a, const PauliString& b) const {
    if (a.n_qubits() != b.n_qubits()) return a.n_qubits() < b.n_qubits();
    if (a.x_bits() != b.x_bits()) return a.x_bits() < b.x_bits();
    return a.z_bits() < b.z_bits();
  }
};

}  // namespace tetrisim
