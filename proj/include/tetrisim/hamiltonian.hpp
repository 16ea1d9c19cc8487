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

#include "tetrisim/pauli.hpp"
#include "tetrisim/schedule.hpp"

namespace tetrisim {

struct HamiltonianTerm {
  PauliString op;
  CoefficientSchedule coefficient;
};

/// H(t) = sum_n c_n(t) O_n with the O_n distinct Pauli strings on a common
/// qubit register. Immutable after construction; duplicate strings with
/// constant coefficients are merged by summing.
class Hamiltonian {
 public:
  Hamiltonian(int n_qubits, std::vector<HamiltonianTerm> terms);

  /// Parses the Pauli-sum text format: one `<coefficient> <IXYZ string>` per
  /// line, `#` starts a comment, blank lines are skipped. Duplicate strings
  /// are merged; otherwise term order follows the file. Errors carry the
  /// offending line number.
  static Hamiltonian parse(std::istream& in);
  static Hamiltonian from_pauli_file(const std::filesystem::path& path);

  int n_qubits() const { return n_qubits_; }
  std::size_t n_terms() const { return terms_.size(); }
  const HamiltonianTerm& term(std::size_t n) const { return terms_.at(n); }
  const std::vector<HamiltonianTerm>& terms() const { return terms_; }

  /// True when every coefficient is a Constant schedule.
  bool is_constant() const;

  /// sum_n |c_n| for a constant Hamiltonian; throws otherwise.
  double sum_abs_coefficients() const;

  /// Per-term z_n(t) = \int_0^t |c_n(s)| ds.
  std::vector<double> z_values(double t) const;

  /// Smallest schedule horizon across terms (+inf when all constant).
  double horizon() const;

 private:
  int n_qubits_;
  std::vector<HamiltonianTerm> terms_;
};

/// Transverse-field Ising model on a rows x cols square lattice,
/// H = -sum_<i,j> Z_i Z_j - h sum_j X_j, with optional periodic boundaries.
/// Sites are indexed row-major, qubit = r * cols + c. Bond terms come first
/// (site order, right neighbour then down neighbour), then the X terms in
/// site order; duplicate periodic edges (side length 2) and self-loops
/// (side length 1) are dropped. The field terms are omitted when h == 0.
Hamiltonian build_ising2d(int rows, int cols, double h, bool periodic);

/// Ising lattice as above with the constant field replaced by the adiabatic
/// ramp h(t), i.e. X coefficients follow adiabatic_field(h_f, t_final) with
/// amplitude -h_f.
Hamiltonian build_ising2d_adiabatic(int rows, int cols, double h_f,
                                    double t_final, bool periodic);

}  // namespace tetrisim
