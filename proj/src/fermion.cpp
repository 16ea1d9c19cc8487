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

#include "tetrisim/fermion.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace tetrisim {

namespace {

using Complex = std::complex<double>;

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

// One ladder operator expanded over Pauli strings:
// c_j  = Z_{<j} (X_j + iY_j)/2, c+_j = Z_{<j} (X_j - iY_j)/2.
std::vector<std::pair<Complex, PauliString>> ladder(int n, int j,
                                                    bool creation) {
  const std::uint64_t z_prefix = (std::uint64_t{1} << j) - 1;
  const std::uint64_t bit = std::uint64_t{1} << j;
  const PauliString x_part = PauliString::from_bits(n, bit, z_prefix);
  const PauliString y_part = PauliString::from_bits(n, bit, z_prefix | bit);
  const Complex y_coeff = creation ? Complex(0.0, -0.5) : Complex(0.0, 0.5);
  return {{Complex(0.5, 0.0), x_part}, {y_coeff, y_part}};
}

// Accumulates Pauli terms preserving first-appearance order.
class TermAccumulator {
 public:
  explicit TermAccumulator(int n_qubits) : n_qubits_(n_qubits) {}

  void add(Complex coefficient, const PauliString& op) {
    const auto key = std::make_pair(op.x_bits(), op.z_bits());
    if (const auto it = index_.find(key); it != index_.end()) {
      coefficients_[it->second] += coefficient;
      return;
    }
    index_.emplace(key, ops_.size());
    ops_.push_back(op);
    coefficients_.push_back(coefficient);
  }

  // Product of a chain of ladder operators, each expanded over Paulis.
  void add_ladder_product(Complex weight, const std::vector<std::pair<int, bool>>& chain) {
    std::vector<std::pair<Complex, PauliString>> acc = {
        {Complex(1.0, 0.0), PauliString::identity(n_qubits_)}};
    for (const auto& [orbital, creation] : chain) {
      const auto factors = ladder(n_qubits_, orbital, creation);
      std::vector<std::pair<Complex, PauliString>> next;
      next.reserve(acc.size() * factors.size());
      for (const auto& [ca, pa] : acc) {
        for (const auto& [cf, pf] : factors) {
          const auto [phase, prod] = multiply(pa, pf);
          next.emplace_back(ca * cf * phase, prod);
        }
      }
      acc = std::move(next);
    }
    for (const auto& [c, p] : acc) {
      add(weight * c, p);
    }
  }

  std::vector<HamiltonianTerm> finish() && {
    std::vector<HamiltonianTerm> terms;
    terms.reserve(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const Complex c = coefficients_[i];
      if (std::abs(c) < 1e-14) continue;
      if (std::abs(c.imag()) > 1e-12 * std::max(1.0, std::abs(c.real()))) {
        throw std::logic_error(
            "Jordan-Wigner accumulation produced a non-Hermitian term");
      }
      terms.push_back({ops_[i], CoefficientSchedule::constant(c.real())});
    }
    return terms;
  }

 private:
  int n_qubits_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> index_;
  std::vector<PauliString> ops_;
  std::vector<Complex> coefficients_;
};

}  // namespace

FermionTermSet FermionTermSet::parse(std::istream& in) {
  FermionTermSet set;
  bool have_header = false;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string body = strip_comment_and_trim(line);
    if (body.empty()) continue;
    std::istringstream fields(body);
    std::string tag;
    fields >> tag;
    const auto fail = [&](const std::string& what) -> std::runtime_error {
      return std::runtime_error("line " + std::to_string(line_number) + ": " +
                                what);
    };
    if (!have_header) {
      if (tag != "norb") throw fail("expected 'norb <N>' header first");
      if (!(fields >> set.n_orbitals) || set.n_orbitals < 1) {
        throw fail("invalid orbital count");
      }
      have_header = true;
      continue;
    }
    std::string extra;
    if (tag == "ob") {
      OneBody term{};
      if (!(fields >> term.i >> term.j >> term.coefficient) ||
          (fields >> extra)) {
        throw fail("expected 'ob <i> <j> <value>'");
      }
      if (!std::isfinite(term.coefficient)) throw fail("value is not finite");
      set.one_body.push_back(term);
    } else if (tag == "tb") {
      TwoBody term{};
      if (!(fields >> term.i >> term.j >> term.k >> term.l >>
            term.coefficient) ||
          (fields >> extra)) {
        throw fail("expected 'tb <i> <j> <k> <l> <value>'");
      }
      if (!std::isfinite(term.coefficient)) throw fail("value is not finite");
      set.two_body.push_back(term);
    } else {
      throw fail("unknown record '" + tag + "' (expected ob or tb)");
    }
  }
  if (!have_header) {
    throw std::runtime_error("missing 'norb <N>' header");
  }
  set.validate();
  return set;
}

FermionTermSet FermionTermSet::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open fermion file: " + path.string());
  }
  try {
    return parse(in);
  } catch (const std::exception& err) {
    throw std::runtime_error(path.string() + ": " + err.what());
  }
}

void FermionTermSet::validate() const {
  if (n_orbitals < 1 || n_orbitals > 64) {
    throw std::invalid_argument("n_orbitals must be in [1, 64]");
  }
  const auto check_index = [&](int idx) {
    if (idx < 0 || idx >= n_orbitals) {
      throw std::invalid_argument("orbital index out of range");
    }
  };
  for (const auto& term : one_body) {
    check_index(term.i);
    check_index(term.j);
    if (!std::isfinite(term.coefficient)) {
      throw std::invalid_argument("one-body coefficient is not finite");
    }
  }
  for (const auto& term : two_body) {
    check_index(term.i);
    check_index(term.j);
    check_index(term.k);
    check_index(term.l);
    if (!std::isfinite(term.coefficient)) {
      throw std::invalid_argument("two-body coefficient is not finite");
    }
  }
}

Hamiltonian jordan_wigner(const FermionTermSet& fermions) {
  fermions.validate();
  const int n = fermions.n_orbitals;
  TermAccumulator acc(n);
  // (term + adjoint)/2 keeps the mapped operator Hermitian for any input.
  for (const auto& term : fermions.one_body) {
    const Complex half(0.5 * term.coefficient, 0.0);
    acc.add_ladder_product(half, {{term.i, true}, {term.j, false}});
    acc.add_ladder_product(half, {{term.j, true}, {term.i, false}});
  }
  for (const auto& term : fermions.two_body) {
    const Complex half(0.5 * term.coefficient, 0.0);
    acc.add_ladder_product(
        half, {{term.i, true}, {term.j, true}, {term.k, false}, {term.l, false}});
    acc.add_ladder_product(
        half, {{term.l, true}, {term.k, true}, {term.j, false}, {term.i, false}});
  }
  auto terms = std::move(acc).finish();
  if (terms.empty()) {
    throw std::invalid_argument(
        "fermionic operator maps to zero; nothing to simulate");
  }
  return Hamiltonian(n, std::move(terms));
}

}  // namespace tetrisim
