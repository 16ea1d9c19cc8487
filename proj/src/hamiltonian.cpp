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

#include "tetrisim/hamiltonian.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace tetrisim {

namespace {

std::string strip_comment_and_trim(const std::string& line) {
  std::string s = line;
  if (const auto pos = s.find('#'); pos != std::string::npos) {
    s.erase(pos);
  }
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Hamiltonian::Hamiltonian(int n_qubits, std::vector<HamiltonianTerm> terms)
    : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 64) {
    throw std::invalid_argument("Hamiltonian n_qubits must be in [1, 64]");
  }
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index;
  terms_.reserve(terms.size());
  for (auto& term : terms) {
    if (term.op.n_qubits() != n_qubits) {
      throw std::invalid_argument(
          "Hamiltonian term qubit count differs from register size");
    }
    const auto key = std::make_pair(term.op.x_bits(), term.op.z_bits());
    if (const auto it = index.find(key); it != index.end()) {
      auto& existing = terms_[it->second].coefficient;
      if (!existing.is_constant() || !term.coefficient.is_constant()) {
        throw std::invalid_argument(
            "duplicate Pauli string with non-constant coefficient");
      }
      existing = CoefficientSchedule::constant(existing.constant_value() +
                                               term.coefficient.constant_value());
      continue;
    }
    index.emplace(key, terms_.size());
    terms_.push_back(std::move(term));
  }
  if (terms_.empty()) {
    throw std::invalid_argument("Hamiltonian needs at least one term");
  }
}

Hamiltonian Hamiltonian::parse(std::istream& in) {
  std::vector<HamiltonianTerm> terms;
  int n_qubits = 0;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string body = strip_comment_and_trim(line);
    if (body.empty()) continue;
    std::istringstream fields(body);
    double coefficient = 0.0;
    std::string word;
    std::string extra;
    if (!(fields >> coefficient >> word) || (fields >> extra)) {
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": expected '<coefficient> <Pauli string>'");
    }
    if (!std::isfinite(coefficient)) {
      throw std::runtime_error("line " + std::to_string(line_number) +
                               ": coefficient is not finite");
    }
    PauliString op = [&] {
      try {
        return PauliString::parse(word);
      } catch (const std::invalid_argument& err) {
        throw std::runtime_error("line " + std::to_string(line_number) + ": " +
                                 err.what());
      }
    }();
    if (n_qubits == 0) {
      n_qubits = op.n_qubits();
    } else if (op.n_qubits() != n_qubits) {
      throw std::runtime_error(
          "line " + std::to_string(line_number) +
          ": Pauli string length differs from earlier terms");
    }
    terms.push_back({op, CoefficientSchedule::constant(coefficient)});
  }
  if (terms.empty()) {
    throw std::runtime_error("no Hamiltonian terms found");
  }
  return Hamiltonian(n_qubits, std::move(terms));
}

Hamiltonian Hamiltonian::from_pauli_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open Pauli file: " + path.string());
  }
  try {
    return parse(in);
  } catch (const std::exception& err) {
    throw std::runtime_error(path.string() + ": " + err.what());
  }
}

bool Hamiltonian::is_constant() const {
  for (const auto& term : terms_) {
    if (!term.coefficient.is_constant()) return false;
  }
  return true;
}

double Hamiltonian::sum_abs_coefficients() const {
  double total = 0.0;
  for (const auto& term : terms_) {
    total += std::abs(term.coefficient.constant_value());
  }
  return total;
}

std::vector<double> Hamiltonian::z_values(double t) const {
  std::vector<double> zs;
  zs.reserve(terms_.size());
  for (const auto& term : terms_) {
    zs.push_back(term.coefficient.z(t));
  }
  return zs;
}

double Hamiltonian::horizon() const {
  double hor = std::numeric_limits<double>::infinity();
  for (const auto& term : terms_) {
    hor = std::min(hor, term.coefficient.horizon());
  }
  return hor;
}

namespace {

Hamiltonian build_ising2d_impl(int rows, int cols, bool periodic,
                               const CoefficientSchedule* field) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("lattice dimensions must be >= 1");
  }
  const int n = rows * cols;
  if (n > 64) {
    throw std::invalid_argument("lattice larger than 64 sites");
  }
  const auto site = [cols](int r, int c) { return r * cols + c; };
  std::vector<HamiltonianTerm> terms;
  std::set<std::pair<int, int>> seen;
  const auto add_bond = [&](int a, int b) {
    if (a == b) return;  // wrap-around self-loop on a side of length 1
    const auto key = std::minmax(a, b);
    if (!seen.insert(key).second) return;  // duplicate edge on a side of length 2
    const PauliString zz = PauliString::from_bits(
        n, 0, (std::uint64_t{1} << a) | (std::uint64_t{1} << b));
    terms.push_back({zz, CoefficientSchedule::constant(-1.0)});
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (periodic || c + 1 < cols) add_bond(site(r, c), site(r, (c + 1) % cols));
      if (periodic || r + 1 < rows) add_bond(site(r, c), site((r + 1) % rows, c));
    }
  }
  if (field != nullptr) {
    for (int q = 0; q < n; ++q) {
      terms.push_back({PauliString::single(n, q, 'X'), *field});
    }
  }
  if (terms.empty()) {
    throw std::invalid_argument("lattice has no bonds and no field terms");
  }
  return Hamiltonian(n, std::move(terms));
}

}  // namespace

Hamiltonian build_ising2d(int rows, int cols, double h, bool periodic) {
  if (h == 0.0) {
    return build_ising2d_impl(rows, cols, periodic, nullptr);
  }
  const CoefficientSchedule field = CoefficientSchedule::constant(-h);
  return build_ising2d_impl(rows, cols, periodic, &field);
}

Hamiltonian build_ising2d_adiabatic(int rows, int cols, double h_f,
                                    double t_final, bool periodic) {
  const CoefficientSchedule field =
      CoefficientSchedule::adiabatic(-h_f, t_final);
  return build_ising2d_impl(rows, cols, periodic, &field);
}

}  // namespace tetrisim
