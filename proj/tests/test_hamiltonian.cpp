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

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "tetrisim/hamiltonian.hpp"

using tetrisim::Hamiltonian;

namespace {

Hamiltonian parse_text(const std::string& text) {
  std::istringstream in(text);
  return Hamiltonian::parse(in);
}

std::string error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    Hamiltonian::parse(in);
  } catch (const std::exception& err) {
    return err.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("hamiltonian") {

TEST_CASE("parse basic file") {
  const auto h = parse_text("-1.0 ZZ\n-3.0 XI\n-3.0 IX\n");
  CHECK(h.n_qubits() == 2);
  CHECK(h.n_terms() == 3);
  CHECK(h.term(0).op.to_string() == "ZZ");
  CHECK(h.term(0).coefficient.constant_value() == -1.0);
  CHECK(h.sum_abs_coefficients() == doctest::Approx(7.0));
}

TEST_CASE("parse merges duplicate strings") {
  const auto h = parse_text("1.0 ZZ\n2.0 ZZ\n");
  CHECK(h.n_terms() == 1);
  CHECK(h.term(0).coefficient.constant_value() == doctest::Approx(3.0));
}

TEST_CASE("parse skips comments and blank lines") {
  const auto h = parse_text("# a comment\n\n 0.5 XY # trailing\n\n");
  CHECK(h.n_terms() == 1);
  CHECK(h.term(0).op.to_string() == "XY");
}

TEST_CASE("parse reports line numbers") {
  CHECK(error_of("1.0 ZZ\n1.0 XYZ\n").find("line 2") != std::string::npos);
  CHECK(error_of("1.0 ZZ\noops\n").find("line 2") != std::string::npos);
  CHECK(error_of("1.0 AB\n").find("line 1") != std::string::npos);
  CHECK(error_of("nan ZZ\n").find("line 1") != std::string::npos);
  CHECK(error_of("1e999 ZZ\n").find("line 1") != std::string::npos);
  CHECK(error_of("").find("no Hamiltonian terms") != std::string::npos);
}

TEST_CASE("ising 3x4 periodic counts") {
  const auto h = tetrisim::build_ising2d(3, 4, 3.0, true);
  CHECK(h.n_qubits() == 12);
  CHECK(h.n_terms() == 36);
  std::size_t zz = 0;
  std::size_t x = 0;
  for (const auto& term : h.terms()) {
    if (term.op.weight() == 2) {
      ++zz;
      CHECK(term.coefficient.constant_value() == -1.0);
    } else {
      ++x;
      CHECK(term.coefficient.constant_value() == -3.0);
    }
  }
  CHECK(zz == 24);  // 2 * rows * cols bonds
  CHECK(x == 12);   // rows * cols field terms
  CHECK(h.sum_abs_coefficients() == doctest::Approx(60.0));
  // Mean sampled gates per tetris pair at tau = 0.04 and t = 1.
  const double gates = 2.0 * 60.0 / std::sin(0.04);
  CHECK(gates == doctest::Approx(3000.8).epsilon(1e-4));
}

TEST_CASE("two-site chain with no field") {
  const auto h = tetrisim::build_ising2d(1, 2, 0.0, false);
  CHECK(h.n_terms() == 1);
  CHECK(h.term(0).op.to_string() == "ZZ");
  CHECK(h.term(0).coefficient.constant_value() == -1.0);
}

TEST_CASE("periodic side length 2 deduplicates edges") {
  const auto h = tetrisim::build_ising2d(2, 2, 0.0, true);
  CHECK(h.n_terms() == 4);
}

TEST_CASE("periodic side length 1 drops self loops") {
  const auto h = tetrisim::build_ising2d(1, 3, 1.0, true);
  // 3 ring bonds + 3 field terms
  CHECK(h.n_terms() == 6);
}

TEST_CASE("adiabatic lattice field follows the ramp") {
  const auto h = tetrisim::build_ising2d_adiabatic(1, 4, 2.5, 1.0, false);
  CHECK_FALSE(h.is_constant());
  CHECK(h.horizon() == doctest::Approx(1.0));
  for (const auto& term : h.terms()) {
    if (term.op.weight() == 1) {
      CHECK(term.coefficient.value(1.0) == doctest::Approx(-2.5));
      CHECK(term.coefficient.value(0.0) == doctest::Approx(0.0));
    }
  }
  const auto zs = h.z_values(1.0);
  CHECK(zs[0] == doctest::Approx(1.0));  // constant bond, |c| = 1
}

TEST_CASE("constructor rejects inconsistent sizes and bad merges") {
  using tetrisim::CoefficientSchedule;
  using tetrisim::HamiltonianTerm;
  using tetrisim::PauliString;
  std::vector<HamiltonianTerm> terms;
  terms.push_back({PauliString::parse("Z"), CoefficientSchedule::constant(1.0)});
  CHECK_THROWS_AS(Hamiltonian(2, std::move(terms)), std::invalid_argument);

  std::vector<HamiltonianTerm> dup;
  dup.push_back({PauliString::parse("X"), tetrisim::adiabatic_field(1.0, 1.0)});
  dup.push_back({PauliString::parse("X"), CoefficientSchedule::constant(1.0)});
  CHECK_THROWS_AS(Hamiltonian(1, std::move(dup)), std::invalid_argument);
}

}  // TEST_SUITE
