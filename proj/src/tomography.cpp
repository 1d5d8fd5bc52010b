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

#include "qdiscrim/tomography.hpp"

#include <algorithm>
#include <cmath>

#include "qdiscrim/parallel.hpp"
#include "qdiscrim/random.hpp"

namespace qdiscrim {

using Index = Eigen::Index;

std::array<std::array<double, 3>, 4> tetrahedron_vertices() {
  const double r2 = std::sqrt(2.0);
  return {{{0.0, 0.0, 1.0},
           {2.0 * r2 / 3.0, 0.0, -1.0 / 3.0},
           {-r2 / 3.0, std::sqrt(2.0 / 3.0), -1.0 / 3.0},
           {-r2 / 3.0, -std::sqrt(2.0 / 3.0), -1.0 / 3.0}}};
}

Povm tetrahedron_povm() {
  std::vector<PovmElement> els;
  int k = 1;
  for (const auto& a : tetrahedron_vertices()) {
    const CMatrix m = 0.25 * (CMatrix::Identity(2, 2) + a[0] * pauli_x().matrix() + a[1] * pauli_y().matrix() +
                              a[2] * pauli_z().matrix());
    els.push_back({"a" + std::to_string(k++), Operator(m)});
  }
  return Povm(std::move(els));
}

FrequencyVector predict_frequencies(const Povm& povm, const DensityOperator& state) {
  if (povm.dim() != state.dim()) throw DimensionError("predict_frequencies: dimension mismatch");
  FrequencyVector f;
  for (const auto& o : povm.outcomes()) f.values.push_back(born_probability(o.effect, state));
  return f;
}

FrequencyVector sample_frequencies(const Povm& povm, const DensityOperator& state, std::uint64_t samples,
                                   std::uint64_t seed, std::size_t threads) {
  if (samples == 0) throw DomainError("sample_frequencies: need at least one sample");
  std::vector<double> probs = predict_frequencies(povm, state).values;
  for (double& p : probs) p = std::max(0.0, p);

  const std::size_t n_blocks = static_cast<std::size_t>((samples + kTrialBlock - 1) / kTrialBlock);
  std::vector<std::vector<std::uint64_t>> block_counts(n_blocks, std::vector<std::uint64_t>(probs.size(), 0));
  parallel_for(n_blocks, threads, [&](std::size_t block) {
    Rng rng = Rng::stream(seed, block);
    const std::uint64_t begin = static_cast<std::uint64_t>(block) * kTrialBlock;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + kTrialBlock);
    for (std::uint64_t t = begin; t < end; ++t) ++block_counts[block][rng.categorical(probs)];
  });

  FrequencyVector f;
  f.samples = samples;
  f.values.assign(probs.size(), 0.0);
  for (const auto& block : block_counts) {
    for (std::size_t k = 0; k < probs.size(); ++k) f.values[k] += static_cast<double>(block[k]);
  }
  for (double& v : f.values) v /= static_cast<double>(samples);
  return f;
}

Reconstruction reconstruct_state(const Povm& povm, const FrequencyVector& freq, double tol) {
  if (freq.values.size() != povm.size()) {
    throw DimensionError("reconstruct_state: " + std::to_string(freq.values.size()) + " frequencies for " +
                         std::to_string(povm.size()) + " outcomes");
  }
  double total = 0.0;
  for (double v : freq.values) {
    if (!std::isfinite(v) || v < 0.0) throw DomainError("reconstruct_state: frequencies must be non-negative");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-6) throw DomainError("reconstruct_state: frequencies must sum to 1");

  const std::size_t d = povm.dim();
  if (frame_rank(povm, tol) != d * d) {
    throw RankDeficientError("reconstruct_state: POVM is not informationally complete (rank " +
                             std::to_string(frame_rank(povm, tol)) + " < " + std::to_string(d * d) + ")");
  }

  Eigen::MatrixXd frame(static_cast<Index>(povm.size()), static_cast<Index>(d * d));
  for (std::size_t k = 0; k < povm.size(); ++k) {
    frame.row(static_cast<Index>(k)) = hermitian_coordinates(povm.effect(k).matrix()).transpose();
  }
  const Eigen::VectorXd f = Eigen::Map<const Eigen::VectorXd>(freq.values.data(), static_cast<Index>(freq.values.size()));
  const Eigen::VectorXd coords = frame.completeOrthogonalDecomposition().solve(f);
  Operator raw = from_hermitian_coordinates(coords, d);

  const auto spectrum = hermitian_eigensystem(raw);
  const bool valid = spectrum.back().value >= -tol && std::abs(raw.trace().real() - 1.0) <= tol;
  if (valid) {
    Operator cleaned = raw;
    if (spectrum.back().value < 0.0) {
      // Rounding-level negatives: clip so the result passes strict checks.
      cleaned = Operator::zero(d);
      double sum = 0.0;
      for (const auto& p : spectrum) sum += std::max(0.0, p.value);
      for (const auto& p : spectrum) {
        cleaned = cleaned + Complex(std::max(0.0, p.value) / sum) * Operator::projector(p.vector);
      }
    }
    return {DensityOperator(cleaned, tol), raw, false};
  }

  double sum = 0.0;
  for (const auto& p : spectrum) sum += std::clamp(p.value, 0.0, 1.0);
  if (sum <= 0.0) throw DomainError("reconstruct_state: estimate has no positive part");
  Operator repaired = Operator::zero(d);
  for (const auto& p : spectrum) {
    repaired = repaired + Complex(std::clamp(p.value, 0.0, 1.0) / sum) * Operator::projector(p.vector);
  }
  return {DensityOperator(repaired), raw, true};
}

PureState phase_twin(const PureState& psi, const SharpObservable& a, const PhaseFunction& f) {
  if (psi.dim() != a.dim()) throw DimensionError("phase_twin: state and observable dimensions differ");
  if (f.values.size() != a.size()) throw DomainError("phase_twin: need one phase per eigenvalue");
  CVector out = CVector::Zero(static_cast<Index>(psi.dim()));
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!std::isfinite(f.values[k])) throw DomainError("phase_twin: phases must be finite");
    out += std::polar(1.0, f.values[k]) * (a.projections()[k].matrix().matrix() * psi.vector().amplitudes());
  }
  return PureState::normalized(StateVector(out));
}

}  // namespace qdiscrim
