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

#include <cmath>
#include <cstdint>
#include <random>

namespace tetrisim {

/// SplitMix64 finalizer, used to derive decorrelated seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed for the `index`-th stream of a master seed. Streams derived this way
/// are independent of worker count and scheduling order, which is what makes
/// parallel Monte Carlo runs reproducible.
constexpr std::uint64_t derive_stream_seed(std::uint64_t master_seed,
                                           std::uint64_t index) {
  return mix64(master_seed ^ mix64(index + 0x632be59bd9b4e019ULL));
}

/// A self-contained random stream. All distributions are implemented on top
/// of the raw 64-bit output so that draws depend only on the seed, not on
/// standard-library distribution internals.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Lowest `n` bits of one raw draw (n <= 63).
  std::uint64_t bits(int n) { return engine_() & ((std::uint64_t{1} << n) - 1); }

  /// Poisson count with mean `mu`, generated as the number of unit-rate
  /// exponential arrivals that fit in a budget of `mu`. Exact for any mu and
  /// free of the underflow that the product-of-uniforms method hits for
  /// large means.
  std::uint64_t poisson(double mu) {
    if (!(mu > 0.0)) return 0;
    std::uint64_t count = 0;
    double acc = 0.0;
    for (;;) {
      acc += -std::log(1.0 - uniform01());
      if (acc > mu) return count;
      ++count;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tetrisim
