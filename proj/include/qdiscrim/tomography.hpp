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

/// @file tomography.hpp
/// State reconstruction from the statistics of an informationally complete
/// POVM, and the phase twins that no sharp observable can tell apart.

#include <array>
#include <cstdint>
#include <vector>

#include "qdiscrim/quantum.hpp"

namespace qdiscrim {

/// Reconstruction needs an informationally complete POVM.
class RankDeficientError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Outcome frequencies in POVM order. `samples` is 0 for exact
/// probabilities, otherwise the number of draws behind them.
struct FrequencyVector {
  std::vector<double> values;
  std::uint64_t samples = 0;
};

/// Bloch vectors (0,0,1), (2√2/3, 0, −1/3), (−√2/3, ±√(2/3), −1/3).
std::array<std::array<double, 3>, 4> tetrahedron_vertices();

/// E_k = ¼(I + a_k·σ), labels "a1" … "a4".
Povm tetrahedron_povm();

/// Trace[ρ E_k] for each outcome.
FrequencyVector predict_frequencies(const Povm& povm, const DensityOperator& state);

/// Empirical frequencies from `samples` Born-rule draws, reproducible for a
/// given seed regardless of `threads`.
FrequencyVector sample_frequencies(const Povm& povm, const DensityOperator& state, std::uint64_t samples,
                                   std::uint64_t seed, std::size_t threads = 1);

struct Reconstruction {
  DensityOperator state;  ///< valid density operator
  Operator raw;           ///< unconstrained least-squares inversion
  bool repaired;          ///< raw was not a density operator and was projected
};

/// Least-squares linear inversion of the frequency map. A raw estimate that
/// is not a density operator is repaired by clipping its eigenvalues to
/// [0, 1] and renormalizing the trace. Throws RankDeficientError for a
/// POVM that is not informationally complete.
Reconstruction reconstruct_state(const Povm& povm, const FrequencyVector& freq, double tol = kDefaultTolerance);

/// Phase f(b_k) per eigenvalue of a sharp observable, in eigenvalue order.
struct PhaseFunction {
  std::vector<double> values;
};

/// e^{i f(A)} ψ = Σ_k e^{i f(b_k)} P_k ψ.
PureState phase_twin(const PureState& psi, const SharpObservable& a, const PhaseFunction& f);

}  // namespace qdiscrim
