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

/// @file scheme.hpp
/// Measurement schemes: a probe prepared in a fixed state, a unitary
/// coupling on object ⊗ probe, and a projective pointer read on the probe.

#include <optional>
#include <string>
#include <vector>

#include "qdiscrim/quantum.hpp"

namespace qdiscrim {

class Rng;

class MeasurementScheme {
 public:
  /// Throws DomainError unless the coupling is unitary on the
  /// (object_dim·probe_dim)-dimensional joint space and every pointer
  /// effect is a projection on the probe space.
  MeasurementScheme(std::size_t object_dim, std::size_t probe_dim, PureState probe_init, Operator coupling,
                    Povm pointer, double tol = kDefaultTolerance);

  std::size_t object_dim() const { return object_dim_; }
  std::size_t probe_dim() const { return probe_dim_; }
  const PureState& probe_init() const { return probe_init_; }
  const Operator& coupling() const { return coupling_; }
  const Povm& pointer() const { return pointer_; }

  /// U|state ⊗ probe_init⟩.
  StateVector evolve(const PureState& state) const;
  /// I ⊗ Q_k on the joint space.
  Operator pointer_projection(std::size_t k) const;

 private:
  std::size_t object_dim_;
  std::size_t probe_dim_;
  PureState probe_init_;
  Operator coupling_;
  Povm pointer_;
};

struct OutcomeProbability {
  std::string label;
  double probability;
};

struct OutcomeRecord {
  std::string label;
  double probability;
  DensityOperator post_state;
};

struct TrivialFlag {
  std::string label;
  std::optional<double> lambda;  ///< set iff E_k = λ I within tolerance
};

/// One pointer subset Q = Σ_{k∈subset} Q_k and its statistics on φ and ψ.
struct PointerSubsetStats {
  std::vector<std::string> labels;
  double retention;  ///< ⟨Uφφ|Q Uφφ⟩
  double leakage;    ///< ⟨Uψφ|Q Uψφ⟩
};

struct NoGoReport {
  double overlap_squared;       ///< |⟨φ|ψ⟩|²
  double joint_overlap;         ///< |⟨Uφφ|Uψφ⟩|, equal to |⟨φ|ψ⟩| by unitarity
  std::vector<PointerSubsetStats> subsets;
  PointerSubsetStats best;      ///< maximizes retention − leakage
  bool perfect_discrimination;  ///< some subset has retention ≈ 1 and leakage ≈ 0
  bool leakage_bound_holds;     ///< retention ≈ 1 ⇒ leakage ≥ |⟨φ|ψ⟩|² − tol, on every subset
};

/// Object POVM with ⟨i|E_k|j⟩ = ⟨i⊗φ|U†(I⊗Q_k)U|j⊗φ⟩, φ the probe state.
Povm induced_observable(const MeasurementScheme& s);

/// Pointer statistics ⟨Uψφ|(I⊗Q_k)|Uψφ⟩ computed on the joint space.
std::vector<OutcomeProbability> outcome_probabilities(const MeasurementScheme& s, const PureState& state);

/// Conditional object state for one outcome: project with I⊗Q_k, trace out
/// the probe, normalize. Throws DomainError for outcomes with probability
/// at most 1e-12.
OutcomeRecord conditional_post_state(const MeasurementScheme& s, const PureState& state,
                                     const std::string& label);

/// λ_k = Trace[E_k]/d whenever ‖E_k − λ_k I‖_F ≤ tol.
std::vector<TrivialFlag> detect_trivial_effects(const MeasurementScheme& s, double tol = kDefaultTolerance);

/// Scans every non-empty pointer subset for a projection that keeps Uφφ and
/// annihilates Uψφ. Pointers with more than 20 outcomes are rejected.
NoGoReport scheme_no_go_check(const MeasurementScheme& s, const PureState& phi, const PureState& psi,
                              double tol = kDefaultTolerance);

// Standard couplings and schemes.

/// Exchanges object and probe; requires equal dimensions.
Operator swap_coupling(std::size_t dim);
/// Qubit CNOT with the object as control.
Operator cnot_coupling();
/// Projective pointer onto the computational basis, labels "0", "1", ...
Povm computational_pointer(std::size_t dim);

/// Probe |0⟩, coupling as given, computational-basis pointer.
MeasurementScheme basis_pointer_scheme(std::size_t object_dim, std::size_t probe_dim, Operator coupling);

/// Haar-random coupling with a pointer in a Haar-random probe basis and a
/// random probe state.
MeasurementScheme random_scheme(std::size_t object_dim, std::size_t probe_dim, Rng& rng);

/// Scheme whose outcome "0" leaves every object state unchanged while the
/// remaining outcomes are generically informative. The probe (dim ≥ 3)
/// starts in a|0⟩ + b|1⟩; on probe |0⟩ the coupling is the identity, on
/// span{|1⟩, …} it is a Haar-random unitary.
MeasurementScheme undisturbing_outcome_scheme(std::size_t object_dim, std::size_t probe_dim, Rng& rng);

}  // namespace qdiscrim
