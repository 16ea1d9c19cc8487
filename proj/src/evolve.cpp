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

#include "tetrisim/evolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "tetrisim/dense.hpp"

namespace tetrisim {

namespace {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;

constexpr double kKrylovTol = 1e-10;
constexpr int kKrylovMaxBasis = 64;
constexpr double kOdeRelTol = 1e-10;
constexpr double kOdeAbsTol = 1e-12;

void require_constant(const Hamiltonian& h, const char* what) {
  if (!h.is_constant()) {
    throw std::invalid_argument(std::string(what) +
                                " requires constant coefficients");
  }
}

void require_match(const Hamiltonian& h, const State& s) {
  if (h.n_qubits() != s.n_qubits()) {
    throw std::invalid_argument("state and Hamiltonian sizes differ");
  }
}

// y = H(t) x, matrix-free over the term list.
void apply_hamiltonian(const Hamiltonian& h, double t, const State& x,
                       State& y) {
  std::fill(y.amplitudes().begin(), y.amplitudes().end(), Complex(0.0, 0.0));
  for (const auto& term : h.terms()) {
    const double c = term.coefficient.value(t);
    if (c == 0.0) continue;
    accumulate_pauli(y, x, term.op, c);
  }
}

State dense_evolve(const Hamiltonian& h, double t, const State& s) {
  const Eigen::MatrixXcd hm = hamiltonian_matrix(h, 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(hm);
  if (eig.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  const auto dim = static_cast<Eigen::Index>(s.dim());
  Vector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v(i) = s.amplitude(static_cast<std::size_t>(i));
  }
  Vector w = eig.eigenvectors().adjoint() * v;
  for (Eigen::Index i = 0; i < dim; ++i) {
    w(i) *= std::polar(1.0, t * eig.eigenvalues()(i));
  }
  w = eig.eigenvectors() * w;
  State out = s;
  for (Eigen::Index i = 0; i < dim; ++i) {
    out.amplitude(static_cast<std::size_t>(i)) = w(i);
  }
  return out;
}

// One Lanczos substep: applies e^{i dt H} to v (unit-norm input scaled by
// beta0 on output). Returns the local error estimate.
double lanczos_substep(const Hamiltonian& h, double dt, State& v) {
  const std::size_t dim = v.dim();
  const double beta0 = v.norm();
  if (beta0 == 0.0) return 0.0;

  std::vector<State> basis;
  basis.reserve(kKrylovMaxBasis);
  State unit = v;
  for (auto& a : unit.amplitudes()) a /= beta0;
  basis.push_back(unit);

  std::vector<double> alpha;
  std::vector<double> beta;  // beta[j] couples basis j and j+1
  State w(v.n_qubits());
  bool breakdown = false;
  int m = 0;
  for (int j = 0; j < kKrylovMaxBasis; ++j) {
    apply_hamiltonian(h, 0.0, basis[static_cast<std::size_t>(j)], w);
    // Full reorthogonalization; cheap at these sizes and keeps the
    // tridiagonal model faithful.
    double a_j = 0.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const Complex overlap = inner_product(basis[k], w);
        if (pass == 0 && k == static_cast<std::size_t>(j)) {
          a_j = overlap.real();
        }
        for (std::size_t i = 0; i < dim; ++i) {
          w.amplitude(i) -= overlap * basis[k].amplitude(i);
        }
      }
    }
    alpha.push_back(a_j);
    m = j + 1;
    const double b_j = w.norm();
    if (b_j < 1e-13 * std::max(1.0, std::abs(a_j))) {
      breakdown = true;  // invariant subspace: the small model is exact
      break;
    }
    beta.push_back(b_j);
    if (m == kKrylovMaxBasis) break;
    for (auto& a : w.amplitudes()) a /= b_j;
    basis.push_back(w);
  }

  Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    tri(i, i) = alpha[static_cast<std::size_t>(i)];
    if (i + 1 < m) {
      tri(i, i + 1) = beta[static_cast<std::size_t>(i)];
      tri(i + 1, i) = beta[static_cast<std::size_t>(i)];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(tri);
  Vector coeff(m);
  for (int i = 0; i < m; ++i) {
    Complex acc(0.0, 0.0);
    for (int k = 0; k < m; ++k) {
      acc += eig.eigenvectors()(i, k) *
             std::polar(1.0, dt * eig.eigenvalues()(k)) *
             eig.eigenvectors()(0, k);
    }
    coeff(i) = acc;
  }

  const double err =
      breakdown ? 0.0
                : beta0 * beta[static_cast<std::size_t>(m - 1)] *
                      std::abs(dt) * std::abs(coeff(m - 1));

  for (auto& a : v.amplitudes()) a = Complex(0.0, 0.0);
  for (int k = 0; k < m; ++k) {
    const Complex c = beta0 * coeff(k);
    const auto& bk = basis[static_cast<std::size_t>(k)].amplitudes();
    for (std::size_t i = 0; i < dim; ++i) {
      v.amplitude(i) += c * bk[i];
    }
  }
  return err;
}

}  // namespace

State exact_evolve_krylov(const Hamiltonian& h, double t, const State& s) {
  require_constant(h, "exact_evolve");
  require_match(h, s);
  if (h.n_qubits() > kKrylovEvolveQubitLimit) {
    throw std::invalid_argument("register too large for the Krylov propagator");
  }
  State v = s;
  if (t == 0.0) return v;
  double remaining = std::abs(t);
  const double direction = t >= 0.0 ? 1.0 : -1.0;
  double dt = remaining;
  const double tol_per_unit = kKrylovTol / std::max(remaining, 1e-300);
  int guard = 0;
  while (remaining > 0.0) {
    dt = std::min(dt, remaining);
    State trial = v;
    const double err = lanczos_substep(h, direction * dt, trial);
    const double budget = tol_per_unit * dt;
    if (err > budget && dt > 1e-12 * std::abs(t)) {
      dt *= 0.5;
      if (++guard > 200) {
        throw std::runtime_error("Krylov propagator failed to converge");
      }
      continue;
    }
    v = std::move(trial);
    remaining -= dt;
    if (err < 0.1 * budget) dt *= 1.5;
  }
  return v;
}

State exact_evolve(const Hamiltonian& h, double t, const State& s) {
  require_constant(h, "exact_evolve");
  require_match(h, s);
  if (h.n_qubits() <= kDenseEvolveQubitLimit) {
    return dense_evolve(h, t, s);
  }
  return exact_evolve_krylov(h, t, s);
}

State exact_evolve_td(const Hamiltonian& h, double t, const State& s) {
  require_match(h, s);
  if (h.n_qubits() > kKrylovEvolveQubitLimit) {
    throw std::invalid_argument("register too large for the ODE oracle");
  }
  if (t < 0.0) {
    throw std::invalid_argument("time-dependent evolution requires t >= 0");
  }
  if (t > h.horizon()) {
    throw std::domain_error("evolution time beyond schedule horizon");
  }
  State y = s;
  if (t == 0.0) return y;

  // Dormand-Prince 5(4) on psi' = i H(t) psi.
  static constexpr double kC[7] = {0.0,     1.0 / 5, 3.0 / 10, 4.0 / 5,
                                   8.0 / 9, 1.0,     1.0};
  static constexpr double kA[7][6] = {
      {},
      {1.0 / 5},
      {3.0 / 40, 9.0 / 40},
      {44.0 / 45, -56.0 / 15, 32.0 / 9},
      {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
      {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176,
       -5103.0 / 18656},
      {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84}};
  static constexpr double kB5[7] = {35.0 / 384,    0.0,  500.0 / 1113,
                                    125.0 / 192,   -2187.0 / 6784,
                                    11.0 / 84,     0.0};
  static constexpr double kB4[7] = {5179.0 / 57600,  0.0,
                                    7571.0 / 16695,  393.0 / 640,
                                    -92097.0 / 339200, 187.0 / 2100,
                                    1.0 / 40};

  const std::size_t dim = y.dim();
  std::vector<State> k(7, State(y.n_qubits()));
  State stage(y.n_qubits());
  State y5(y.n_qubits());

  const auto rhs = [&](double time, const State& in, State& out) {
    apply_hamiltonian(h, time, in, out);
    for (auto& a : out.amplitudes()) a *= Complex(0.0, 1.0);
  };

  double time = 0.0;
  double step = t;
  int guard = 0;
  while (time < t) {
    step = std::min(step, t - time);
    rhs(time, y, k[0]);
    for (int stage_i = 1; stage_i < 7; ++stage_i) {
      stage = y;
      for (int j = 0; j < stage_i; ++j) {
        const double w = kA[stage_i][j] * step;
        if (w == 0.0) continue;
        const auto& kj = k[static_cast<std::size_t>(j)].amplitudes();
        for (std::size_t i = 0; i < dim; ++i) {
          stage.amplitude(i) += w * kj[i];
        }
      }
      rhs(time + kC[stage_i] * step, stage, k[static_cast<std::size_t>(stage_i)]);
    }
    y5 = y;
    double err_sq = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      Complex acc5(0.0, 0.0);
      Complex acc4(0.0, 0.0);
      for (int j = 0; j < 7; ++j) {
        const Complex kji = k[static_cast<std::size_t>(j)].amplitude(i);
        acc5 += kB5[j] * kji;
        acc4 += kB4[j] * kji;
      }
      const Complex next = y.amplitude(i) + step * acc5;
      y5.amplitude(i) = next;
      const double scale =
          kOdeAbsTol + kOdeRelTol * std::max(std::abs(y.amplitude(i)),
                                             std::abs(next));
      err_sq += std::norm(step * (acc5 - acc4)) / (scale * scale);
    }
    const double err = std::sqrt(err_sq / static_cast<double>(dim));
    if (err <= 1.0) {
      time += step;
      y = y5;
      guard = 0;
    } else if (++guard > 60) {
      throw std::runtime_error("ODE integrator failed to converge");
    }
    const double factor =
        err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
    step *= std::clamp(factor, 0.2, 5.0);
    if (step < 1e-14 * t) {
      throw std::runtime_error("ODE step size underflow");
    }
  }
  return y;
}

State trotter_evolve(const Hamiltonian& h, double t, double tau,
                     const State& s) {
  require_constant(h, "trotter_evolve");
  require_match(h, s);
  if (!(tau > 0.0)) {
    throw std::invalid_argument("Trotter step must be positive");
  }
  if (t < 0.0) {
    throw std::invalid_argument("trotter_evolve requires t >= 0");
  }
  State v = s;
  const auto sweep = [&](double dt) {
    for (const auto& term : h.terms()) {
      apply_pauli_rotation(v, term.op, dt * term.coefficient.constant_value());
    }
  };
  const auto full_steps = static_cast<std::size_t>(t / tau + 1e-9);
  for (std::size_t i = 0; i < full_steps; ++i) {
    sweep(tau);
  }
  const double residual = t - static_cast<double>(full_steps) * tau;
  if (residual > 1e-12 * std::max(1.0, t)) {
    sweep(residual);
  }
  return v;
}

}  // namespace tetrisim
