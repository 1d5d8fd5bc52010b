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

/// @file quantum.hpp
/// States, effects, POVMs and sharp observables with validated invariants.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qdiscrim/hilbert.hpp"

namespace qdiscrim {

/// Unit vector. Construction throws DomainError if ‖v‖ deviates from 1 by
/// more than the tolerance; the stored vector is renormalized exactly.
class PureState {
 public:
  explicit PureState(const StateVector& v, double tol = kDefaultTolerance);
  PureState(std::initializer_list<Complex> amplitudes);

  /// Scales any non-zero vector to unit length.
  static PureState normalized(const StateVector& v);

  std::size_t dim() const { return v_.dim(); }
  const StateVector& vector() const { return v_; }
  Complex operator[](std::size_t i) const { return v_[i]; }

 private:
  StateVector v_;
};

/// Hermitian, positive semidefinite, unit trace.
class DensityOperator {
 public:
  explicit DensityOperator(const Operator& m, double tol = kDefaultTolerance);

  static DensityOperator from_pure(const PureState& s);
  static DensityOperator maximally_mixed(std::size_t dim);

  std::size_t dim() const { return m_.dim(); }
  const Operator& matrix() const { return m_; }

 private:
  Operator m_;
};

/// Hermitian E with O ≤ E ≤ I.
class Effect {
 public:
  explicit Effect(const Operator& m, double tol = kDefaultTolerance);

  std::size_t dim() const { return m_.dim(); }
  const Operator& matrix() const { return m_; }
  Effect complement() const;

 private:
  Operator m_;
};

/// Candidate POVM entry before validation.
struct PovmElement {
  std::string label;
  Operator op;
};

/// Diagnostic produced by validate_povm.
struct PovmReport {
  bool valid = false;
  bool sharp = false;
  double completeness_residual = 0.0;  ///< ‖Σ E_k − I‖_F
  std::vector<double> min_eigenvalues;
  std::vector<double> max_eigenvalues;
  std::vector<bool> effect_ok;  ///< Hermitian with spectrum in [0, 1]
  std::string message;
};

PovmReport validate_povm(std::span<const PovmElement> elements, double tol = kDefaultTolerance);

/// Outcome-labelled effects summing to the identity.
class Povm {
 public:
  struct Outcome {
    std::string label;
    Effect effect;
  };

  /// Throws DomainError with the validation message if the family is not a POVM.
  explicit Povm(std::vector<PovmElement> elements, double tol = kDefaultTolerance);

  std::size_t size() const { return outcomes_.size(); }
  std::size_t dim() const { return outcomes_.front().effect.dim(); }
  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  const Effect& effect(std::size_t k) const { return outcomes_.at(k).effect; }
  const std::string& label(std::size_t k) const { return outcomes_.at(k).label; }
  /// Index of `label`; throws DomainError if absent.
  std::size_t index_of(const std::string& label) const;

  std::vector<PovmElement> elements() const;

 private:
  std::vector<Outcome> outcomes_;
};

PovmReport validate_povm(const Povm& povm, double tol = kDefaultTolerance);

/// B = Σ b_k P_k with distinct b_k and orthogonal projections summing to I.
class SharpObservable {
 public:
  SharpObservable(std::vector<double> eigenvalues, std::vector<Operator> projections,
                  double tol = kDefaultTolerance);

  std::size_t dim() const { return projections_.front().dim(); }
  std::size_t size() const { return eigenvalues_.size(); }
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  const std::vector<Effect>& projections() const { return projections_; }

  /// Projections as a POVM labelled by eigenvalue.
  Povm to_povm() const;

 private:
  std::vector<double> eigenvalues_;
  std::vector<Effect> projections_;
};

/// Unit vector on the Bloch sphere.
class SpinDirection {
 public:
  SpinDirection(double x, double y, double z, double tol = kDefaultTolerance);

  static SpinDirection from_angles(double polar, double azimuth);
  static SpinDirection x_axis() { return {1.0, 0.0, 0.0}; }
  static SpinDirection y_axis() { return {0.0, 1.0, 0.0}; }
  static SpinDirection z_axis() { return {0.0, 0.0, 1.0}; }

  const std::array<double, 3>& components() const { return n_; }
  double x() const { return n_[0]; }
  double y() const { return n_[1]; }
  double z() const { return n_[2]; }

  /// n·σ
  Operator pauli() const;

 private:
  std::array<double, 3> n_;
};

/// ⟨ψ|Eψ⟩.
double born_probability(const Effect& e, const PureState& state);
/// Trace[ρE].
double born_probability(const Effect& e, const DensityOperator& state);

enum class PropertyStatus { Real, Absent, Indeterminate };

std::string to_string(PropertyStatus s);

/// Classifies a projection against a state: Real if Pρ = ρ, Absent if Pρ = O,
/// Indeterminate otherwise. Residuals use the operator norm. Throws
/// DomainError if `p` is not a projection.
PropertyStatus property_status(const Operator& p, const DensityOperator& rho,
                               double tol = kDefaultTolerance);

struct CertaintyTolerances {
  double probability = 1e-12;
  double vector = 1e-6;
};

/// Both sides of "⟨φ|Eφ⟩ = 1 ⇔ Eφ = φ" and "⟨φ|Eφ⟩ = 0 ⇔ Eφ = 0".
struct CertaintyReport {
  double probability;          ///< ⟨φ|Eφ⟩
  double fixed_residual;       ///< ‖Eφ − φ‖
  double annihilated_residual; ///< ‖Eφ‖
  bool probability_one;
  bool fixes_state;
  bool probability_zero;
  bool annihilates_state;

  /// True when each probability certainty coincides with its vector form.
  bool consistent() const {
    return probability_one == fixes_state && probability_zero == annihilates_state;
  }
};

CertaintyReport effect_certainty_lemma(const Effect& e, const PureState& state,
                                       CertaintyTolerances tol = {});

/// s_n = ½ n·σ: eigenvalues (+½, −½) with the matching spectral projections.
SharpObservable spin_component(const SpinDirection& n);

/// Eigenvector |±,n⟩ of n·σ, sign = +1 or −1. Global phase is fixed so that
/// the first non-zero amplitude is real and positive, which gives
/// |±,x⟩ = (1, ±1)/√2 and |±,y⟩ = (1, ±i)/√2.
PureState spin_state(const SpinDirection& n, int sign);

/// (|+,z⟩|−,z⟩ − |−,z⟩|+,z⟩)/√2 in object-major ordering.
PureState singlet();

/// Coordinates of a Hermitian operator in an orthonormal Hilbert–Schmidt
/// basis (d² reals); Trace[AB] equals the dot product of coordinates.
Eigen::VectorXd hermitian_coordinates(const Operator& op);
/// Inverse of hermitian_coordinates.
Operator from_hermitian_coordinates(const Eigen::VectorXd& coords, std::size_t dim);

/// Rank of the real span of the effects, compared against d².
std::size_t frame_rank(const Povm& povm, double tol = kDefaultTolerance);
bool is_informationally_complete(const Povm& povm, double tol = kDefaultTolerance);

/// ½‖ρ − σ‖₁.
double trace_distance(const DensityOperator& rho, const DensityOperator& sigma);

}  // namespace qdiscrim
