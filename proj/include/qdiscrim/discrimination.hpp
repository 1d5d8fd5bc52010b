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

/// @file discrimination.hpp
/// Optimal discrimination of two pure states.
///
/// Minimum-error: one effect E signals φ, its complement signals ψ. The
/// optimum is the projection onto the positive eigenspace of
/// p_φ|φ⟩⟨φ| − p_ψ|ψ⟩⟨ψ|, giving ½[1 + √(1 − |⟨φ|ψ⟩|²)] for equal priors.
///
/// Unambiguous: three outcomes E₁ (certainly φ), E₂ (certainly ψ) and an
/// inconclusive E₃ = I − E₁ − E₂. On a qubit the zero-error conditions
/// force E₁ = e₁(I − |ψ⟩⟨ψ|), E₂ = e₂(I − |φ⟩⟨φ|); positivity of E₃ is
/// 1 − (e₁ + e₂) + e₁e₂w ≥ 0 with w = 1 − |⟨φ|ψ⟩|², and the optimum is
/// e₁ = e₂ = 1/(1 + |⟨φ|ψ⟩|) with success probability 1 − |⟨φ|ψ⟩|.
///
/// The brute_force_* functions are grid-search oracles that share no code
/// path with the closed forms beyond the Born rule.

#include <cstddef>

#include "qdiscrim/quantum.hpp"

namespace qdiscrim {

/// A priori probabilities of φ and ψ.
class PriorPair {
 public:
  explicit PriorPair(double prior_phi = 0.5);

  double phi() const { return phi_; }
  double psi() const { return 1.0 - phi_; }

 private:
  double phi_;
};

struct MinErrorResult {
  Effect effect;  ///< outcome "φ"; the complement signals ψ
  double p_success;
  double overlap;  ///< |⟨φ|ψ⟩|
};

/// p_φ⟨φ|Eφ⟩ + p_ψ⟨ψ|(I − E)ψ⟩.
double min_error_success(const Effect& e, const PureState& phi, const PureState& psi,
                         PriorPair priors = PriorPair{});

/// Throws DimensionError for mismatched dimensions.
MinErrorResult helstrom(const PureState& phi, const PureState& psi, PriorPair priors = PriorPair{});

struct UnambiguousResult {
  double e1;
  double e2;
  double w;        ///< 1 − |⟨φ|ψ⟩|²
  Povm effects;    ///< outcomes "phi", "psi", "inconclusive"
  double p_success;
  double overlap;  ///< |⟨φ|ψ⟩|
  bool degenerate; ///< states equal up to phase; p_success is 0
};

/// ½⟨φ|E₁φ⟩ + ½⟨ψ|E₂ψ⟩ for a POVM whose first two outcomes are E₁, E₂.
double unambiguous_success(const Povm& effects, const PureState& phi, const PureState& psi);

/// The three-outcome family E₁ = e₁(I − |ψ⟩⟨ψ|), E₂ = e₂(I − |φ⟩⟨φ|),
/// E₃ = I − E₁ − E₂. Throws DomainError if E₃ is not positive.
Povm unambiguous_family(const PureState& phi, const PureState& psi, double e1, double e2);

/// Optimal unambiguous discrimination of two qubit states. Throws
/// DimensionError unless both states are two-dimensional; larger pairs go
/// through rotate_to_common_span first.
UnambiguousResult unambiguous(const PureState& phi, const PureState& psi);

/// 1 − (e₁ + e₂) + e₁e₂w, the determinant of I − E₁ − E₂.
double positivity_residual(double e1, double e2, double w);

/// positivity_residual(e1, e2, w) ≥ −tol.
bool positivity_constraint(double e1, double e2, double w, double tol = 1e-12);

/// Orthonormal basis {φ, ψ⊥} of span{φ, ψ} and the coordinates of both
/// states in it.
struct CommonSpan {
  CMatrix basis;  ///< d × 2 isometry
  PureState phi;  ///< (1, 0)
  PureState psi;
};

CommonSpan rotate_to_common_span(const PureState& phi, const PureState& psi);

/// Carries a qubit POVM on the common span back to the full space; the
/// orthogonal complement is added to the last outcome.
Povm embed_povm(const CommonSpan& span, const Povm& qubit_povm);

struct MinErrorOracle {
  double p_success;
  double polar;    ///< Bloch angles of the rank-1 projection Π
  double azimuth;
  double alpha;    ///< weight on Π
  double beta;     ///< weight on I − Π
};

/// Grid search of p over E = αΠ + β(I − Π), Π = |+,n⟩⟨+,n| with n on a
/// (resolution+1) × resolution polar/azimuth grid and α, β ∈ {i/resolution}.
/// Qubits only; resolution must be at least 50.
MinErrorOracle brute_force_min_error(const PureState& phi, const PureState& psi, PriorPair priors,
                                     std::size_t resolution, std::size_t threads = 1);

struct UnambiguousOracle {
  double p_success;
  double e1;  ///< centroid of the tied grid maximizers
  double e2;
  std::size_t feasible_points;
  std::size_t maximizers;  ///< grid points within 10⁻¹² of p_success
};

/// Grid search of ½⟨φ|E₁φ⟩ + ½⟨ψ|E₂ψ⟩ over the three-outcome family with
/// (e₁, e₂) ∈ {i/resolution}², skipping points that violate positivity.
/// The objective is linear, so the maximum is often attained on a segment
/// of grid points; (e1, e2) is the centroid of that set.
UnambiguousOracle brute_force_unambiguous(const PureState& phi, const PureState& psi, std::size_t resolution,
                                          std::size_t threads = 1);

}  // namespace qdiscrim
