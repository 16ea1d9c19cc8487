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
#include <vector>

#include "tetrisim/hamiltonian.hpp"
#include "tetrisim/noise.hpp"
#include "tetrisim/sampler.hpp"
#include "tetrisim/state.hpp"

namespace tetrisim {

/// Real-weighted sum of Pauli strings used as a measurement operator.
struct WeightedPauli {
  double weight;
  PauliString op;
};
using ObservableSum = std::vector<WeightedPauli>;

struct EstimatorOptions {
  std::size_t n_samples = 1000;
  std::uint64_t master_seed = 0;
  /// Worker threads; 0 means hardware concurrency. Results are bit-identical
  /// for any value: sample i always uses the stream derived from
  /// (master_seed, i) and the reduction runs in sample-index order.
  int n_threads = 1;
  const NoiseModel* noise = nullptr;                  // optional, non-owning
  const std::vector<std::size_t>* background = nullptr;  // optional, non-owning
};

struct EstimatorResult {
  std::complex<double> mean;  // already divided by lambda_att (and q_att if mitigating)
  double stderr_re = 0.0;     // standard error of Re(mean), same scale as mean
  double stderr_im = 0.0;
  std::size_t n_samples = 0;
  double mean_gates = 0.0;  // measured mean applied gates per sample
  AttenuationReport report;
};

/// Monte Carlo estimate of <psi(t)| M |psi(t)> for M = sum_k w_k P_k: each
/// sample draws two independent tetrises (ket and bra; the bra is computed
/// directly rather than via an adjoint circuit), forms
/// x_i = <psi_T'| M |psi_T>, and the sample mean is divided by lambda_att.
/// One amplitude per tetris pair. mean_gates counts both tetrises.
EstimatorResult estimate_observable_sum(const Hamiltonian& h,
                                        const ObservableSum& observable,
                                        double t, const State& initial,
                                        const AngleAssignment& angles,
                                        const EstimatorOptions& options);

/// Single-Pauli-observable convenience wrapper.
EstimatorResult estimate_expectation(const Hamiltonian& h,
                                     const PauliString& observable, double t,
                                     const State& initial,
                                     const AngleAssignment& angles,
                                     const EstimatorOptions& options);

/// Energy estimate <psi(t)| H(t) |psi(t)> via the weighted-sum estimator
/// with weights c_n(t).
EstimatorResult estimate_energy(const Hamiltonian& h, double t,
                                const State& initial,
                                const AngleAssignment& angles,
                                const EstimatorOptions& options);

/// Loschmidt echo L(t) = <initial| psi(t)>: one tetris per sample,
/// x_i = <initial|psi_T>, divided by sqrt(lambda_att) (and sqrt(q_att) when
/// mitigating — single-copy attenuation).
EstimatorResult estimate_loschmidt(const Hamiltonian& h, double t,
                                   const State& initial,
                                   const AngleAssignment& angles,
                                   const EstimatorOptions& options);

/// R = Im(L) / Re(L), invariant under positive rescaling of L (so uniform
/// depolarizing attenuation cancels). Throws std::domain_error when the real
/// part is statistically indistinguishable from zero
/// (|Re L| <= 10 * stderr_re).
double ratio_R(std::complex<double> loschmidt, double stderr_re);
double ratio_R(const EstimatorResult& loschmidt);

}  // namespace tetrisim
