// Copyright 2026 The qdiscrim Authors
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

/// @file random.hpp
/// Seeded, splittable random source and random quantum objects.
///
/// Every stream is a std::mt19937_64 whose seed is derived from
/// (seed, stream id) through SplitMix64, so independent blocks of a Monte
/// Carlo run can be generated in any order. Distribution transforms are
/// implemented here rather than taken from <random>, whose distributions
/// are not specified bit-exactly across standard libraries.

#include <cstdint>
#include <random>
#include <span>

#include "qdiscrim/quantum.hpp"

namespace qdiscrim {

std::uint64_t splitmix64(std::uint64_t x);

class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Independent stream `stream_id` of the generator family selected by `seed`.
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on (0, 1]; outcomes of probability zero are never drawn.
  double uniform_positive();
  /// Standard normal (Box–Muller).
  double normal();
  /// Index k with probability p_k; the weights need not be normalized.
  /// Throws DomainError on negative weights or a zero total.
  std::size_t categorical(std::span<const double> weights);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// Complex Gaussian matrix with i.i.d. standard normal real and imaginary parts.
CMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
Operator haar_unitary(std::size_t dim, Rng& rng);

/// Uniformly distributed unit vector.
PureState random_pure_state(std::size_t dim, Rng& rng);

/// Full-rank density operator G G† / Tr[G G†] from a square Ginibre matrix.
DensityOperator random_density_operator(std::size_t dim, Rng& rng);

/// Effect with Haar-random eigenbasis and eigenvalues uniform in [0, 1].
Effect random_effect(std::size_t dim, Rng& rng);

}  // namespace qdiscrim
