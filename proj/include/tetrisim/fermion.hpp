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

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "tetrisim/hamiltonian.hpp"

namespace tetrisim {

/// Second-quantized operator data: sum_ij h_ij c+_i c_j plus
/// sum_ijkl h_ijkl c+_i c+_j c_k c_l, with 0-based spin-orbital indices.
struct FermionTermSet {
  struct OneBody {
    int i, j;
    double coefficient;
  };
  struct TwoBody {
    int i, j, k, l;
    double coefficient;
  };

  int n_orbitals = 0;
  std::vector<OneBody> one_body;
  std::vector<TwoBody> two_body;

  /// Parses the fermion text format: a `norb <N>` header, then
  /// `ob <i> <j> <value>` and `tb <i> <j> <k> <l> <value>` lines; `#`
  /// comments and blank lines as in the Pauli-sum format.
  static FermionTermSet parse(std::istream& in);
  static FermionTermSet from_file(const std::filesystem::path& path);

  void validate() const;
};

/// Maps the fermionic operator to a qubit Hamiltonian under the
/// Jordan-Wigner convention: qubit q hosts spin-orbital q and
/// c_j = (prod_{k<j} Z_k) (X_j + i Y_j) / 2.
///
/// Each input term enters as (term + adjoint) / 2, so the result is
/// Hermitian for any real coefficients; the identity component, when
/// non-zero, is kept as an explicit all-I term. Terms whose net coefficient
/// cancels below 1e-14 are dropped.
Hamiltonian jordan_wigner(const FermionTermSet& fermions);

}  // namespace tetrisim
