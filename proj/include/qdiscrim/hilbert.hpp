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

/// @file hilbert.hpp
/// Dense linear algebra over small finite-dimensional Hilbert spaces.
///
/// Vectors and operators are stored densely in a fixed orthonormal basis.
/// Composite spaces use object-major ordering: in A ⊗ B the index of the
/// first factor varies slowest, so |i⟩⊗|j⟩ sits at index i·dim(B) + j.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qdiscrim {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Tolerance used by every predicate unless the caller passes another.
inline constexpr double kDefaultTolerance = 1e-9;

/// Base class of all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a mathematical precondition (non-unit vector,
/// non-Hermitian operator, incomplete POVM, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Ordered amplitudes in a fixed orthonormal basis. Not necessarily unit.
class StateVector {
 public:
  explicit StateVector(CVector amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  static StateVector basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return static_cast<std::size_t>(amps_.size()); }
  const CVector& amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_(static_cast<Eigen::Index>(i)); }
  double norm() const { return amps_.norm(); }

 private:
  CVector amps_;
};

/// Square complex matrix with finite entries.
class Operator {
 public:
  explicit Operator(CMatrix entries);

  static Operator identity(std::size_t dim);
  static Operator zero(std::size_t dim);
  /// |ket⟩⟨bra|
  static Operator outer(const StateVector& ket, const StateVector& bra);
  /// |v⟩⟨v|
  static Operator projector(const StateVector& v);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const {
    return m_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }

  Operator adjoint() const { return Operator(m_.adjoint()); }
  Complex trace() const { return m_.trace(); }

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(Complex s, const Operator& a);
  friend StateVector operator*(const Operator& a, const StateVector& v);

 private:
  CMatrix m_;
};

enum class Subsystem { First, Second };

/// Factor dimensions of a bipartite space, first factor first.
struct Dims {
  std::size_t first;
  std::size_t second;
};

StateVector tensor_product(const StateVector& a, const StateVector& b);
Operator tensor_product(const Operator& a, const Operator& b);

/// Traces out the factor not selected by `keep`. Throws DimensionError when
/// dims.first·dims.second differs from the joint dimension.
Operator partial_trace(const Operator& joint, Subsystem keep, Dims dims);

/// ⟨a|b⟩, antilinear in the first argument.
Complex inner_product(const StateVector& a, const StateVector& b);

struct EigenPair {
  double value;
  StateVector vector;
};

/// Spectral decomposition of a Hermitian operator, eigenvalues sorted
/// descending with orthonormal eigenvectors. 2×2 inputs use a closed form.
/// Throws DomainError if the input is not Hermitian within `tol`.
std::vector<EigenPair> hermitian_eigensystem(const Operator& op, double tol = kDefaultTolerance);

/// Eigenvalues only, sorted descending.
std::vector<double> hermitian_eigenvalues(const Operator& op, double tol = kDefaultTolerance);

double frobenius_norm(const Operator& op);
/// Largest singular value.
double operator_norm(const Operator& op);

// Predicates compare a residual against `tol`: ‖A−A†‖_F, ‖U†U−I‖_F,
// the smallest eigenvalue, ‖P²−P‖_F respectively.
bool is_hermitian(const Operator& op, double tol = kDefaultTolerance);
bool is_unitary(const Operator& op, double tol = kDefaultTolerance);
bool is_positive_semidefinite(const Operator& op, double tol = kDefaultTolerance);
bool is_projection(const Operator& op, double tol = kDefaultTolerance);

/// ½(A + A†); used to strip rounding asymmetry before spectral work.
Operator hermitian_part(const Operator& op);

// Pauli matrices.
Operator pauli_x();
Operator pauli_y();
Operator pauli_z();

}  // namespace qdiscrim
