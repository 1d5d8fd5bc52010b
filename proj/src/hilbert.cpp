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

#include "qdiscrim/hilbert.hpp"

#include <algorithm>
#include <cmath>

namespace qdiscrim {

namespace {

using Index = Eigen::Index;

Index idx(std::size_t i) { return static_cast<Index>(i); }

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

// Closed-form spectrum of a 2×2 Hermitian matrix [[a, b], [b*, c]].
std::vector<EigenPair> eigensystem_2x2(const CMatrix& m) {
  const double a = m(0, 0).real();
  const double c = m(1, 1).real();
  const Complex b = m(0, 1);
  const double mean = 0.5 * (a + c);
  const double half_gap = 0.5 * (a - c);
  const double radius = std::hypot(half_gap, std::abs(b));

  if (radius == 0.0) {
    return {{mean, StateVector::basis(2, 0)}, {mean, StateVector::basis(2, 1)}};
  }

  auto eigenvector = [&](double lambda) {
    // Two candidate null vectors of (M − λI); take the better conditioned one.
    CVector u(2), v(2);
    u << b, Complex(lambda - a);
    v << Complex(lambda - c), std::conj(b);
    CVector w = u.norm() >= v.norm() ? u : v;
    return StateVector(w / w.norm());
  };

  const double hi = mean + radius;
  const double lo = mean - radius;
  return {{hi, eigenvector(hi)}, {lo, eigenvector(lo)}};
}

}  // namespace

StateVector::StateVector(CVector amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) throw DimensionError("StateVector: dimension must be at least 1");
  if (!amps_.allFinite()) throw DomainError("StateVector: non-finite amplitude");
}

StateVector::StateVector(std::initializer_list<Complex> amplitudes)
    : StateVector([&] {
        CVector v(static_cast<Index>(amplitudes.size()));
        Index i = 0;
        for (const auto& a : amplitudes) v(i++) = a;
        return v;
      }()) {}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("StateVector::basis: index out of range");
  CVector v = CVector::Zero(idx(dim));
  v(idx(index)) = 1.0;
  return StateVector(std::move(v));
}

Operator::Operator(CMatrix entries) : m_(std::move(entries)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    throw DimensionError("Operator: matrix must be square and non-empty");
  }
  if (!m_.allFinite()) throw DomainError("Operator: non-finite entry");
}

Operator Operator::identity(std::size_t dim) { return Operator(CMatrix::Identity(idx(dim), idx(dim))); }

Operator Operator::zero(std::size_t dim) { return Operator(CMatrix::Zero(idx(dim), idx(dim))); }

Operator Operator::outer(const StateVector& ket, const StateVector& bra) {
  require_same_dim(ket.dim(), bra.dim(), "Operator::outer");
  return Operator(ket.amplitudes() * bra.amplitudes().adjoint());
}

Operator Operator::projector(const StateVector& v) { return outer(v, v); }

Operator operator+(const Operator& a, const Operator& b) {
  require_same_dim(a.dim(), b.dim(), "operator+");
  return Operator(a.m_ + b.m_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_dim(a.dim(), b.dim(), "operator-");
  return Operator(a.m_ - b.m_);
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_dim(a.dim(), b.dim(), "operator*");
  return Operator(a.m_ * b.m_);
}

Operator operator*(Complex s, const Operator& a) { return Operator(s * a.m_); }

StateVector operator*(const Operator& a, const StateVector& v) {
  require_same_dim(a.dim(), v.dim(), "operator* (vector)");
  return StateVector(a.m_ * v.amplitudes());
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const Index da = idx(a.dim());
  const Index db = idx(b.dim());
  CVector out(da * db);
  for (Index i = 0; i < da; ++i) {
    out.segment(i * db, db) = a.amplitudes()(i) * b.amplitudes();
  }
  return StateVector(std::move(out));
}

Operator tensor_product(const Operator& a, const Operator& b) {
  const Index da = idx(a.dim());
  const Index db = idx(b.dim());
  CMatrix out(da * db, da * db);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < da; ++j) {
      out.block(i * db, j * db, db, db) = a.matrix()(i, j) * b.matrix();
    }
  }
  return Operator(std::move(out));
}

Operator partial_trace(const Operator& joint, Subsystem keep, Dims dims) {
  if (dims.first == 0 || dims.second == 0 || dims.first * dims.second != joint.dim()) {
    throw DimensionError("partial_trace: factor dimensions " + std::to_string(dims.first) + "x" +
                         std::to_string(dims.second) + " do not match joint dimension " +
                         std::to_string(joint.dim()));
  }
  const Index d1 = idx(dims.first);
  const Index d2 = idx(dims.second);
  const CMatrix& m = joint.matrix();

  if (keep == Subsystem::First) {
    CMatrix out = CMatrix::Zero(d1, d1);
    for (Index j = 0; j < d2; ++j) {
      for (Index a = 0; a < d1; ++a) {
        for (Index b = 0; b < d1; ++b) out(a, b) += m(a * d2 + j, b * d2 + j);
      }
    }
    return Operator(std::move(out));
  }
  CMatrix out = CMatrix::Zero(d2, d2);
  for (Index i = 0; i < d1; ++i) out += m.block(i * d2, i * d2, d2, d2);
  return Operator(std::move(out));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  require_same_dim(a.dim(), b.dim(), "inner_product");
  return a.amplitudes().dot(b.amplitudes());
}

Operator hermitian_part(const Operator& op) { return Operator(0.5 * (op.matrix() + op.matrix().adjoint())); }

std::vector<EigenPair> hermitian_eigensystem(const Operator& op, double tol) {
  if (!is_hermitian(op, tol)) throw DomainError("hermitian_eigensystem: operator is not Hermitian");
  const CMatrix h = hermitian_part(op).matrix();

  if (h.rows() == 1) return {{h(0, 0).real(), StateVector::basis(1, 0)}};
  if (h.rows() == 2) return eigensystem_2x2(h);

  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h);
  if (solver.info() != Eigen::Success) throw DomainError("hermitian_eigensystem: solver failed");

  // Eigen returns ascending order.
  std::vector<EigenPair> out;
  out.reserve(static_cast<std::size_t>(h.rows()));
  for (Index k = h.rows() - 1; k >= 0; --k) {
    out.push_back({solver.eigenvalues()(k), StateVector(solver.eigenvectors().col(k))});
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const Operator& op, double tol) {
  if (!is_hermitian(op, tol)) throw DomainError("hermitian_eigenvalues: operator is not Hermitian");
  const CMatrix h = hermitian_part(op).matrix();
  if (h.rows() <= 2) {
    std::vector<double> out;
    for (const auto& p : hermitian_eigensystem(op, tol)) out.push_back(p.value);
    return out;
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + h.rows());
  std::reverse(out.begin(), out.end());
  return out;
}

double frobenius_norm(const Operator& op) { return op.matrix().norm(); }

double operator_norm(const Operator& op) {
  Eigen::JacobiSVD<CMatrix> svd(op.matrix());
  return svd.singularValues()(0);
}

bool is_hermitian(const Operator& op, double tol) {
  return (op.matrix() - op.matrix().adjoint()).norm() <= tol;
}

bool is_unitary(const Operator& op, double tol) {
  const Index d = op.matrix().rows();
  return (op.matrix().adjoint() * op.matrix() - CMatrix::Identity(d, d)).norm() <= tol;
}

bool is_positive_semidefinite(const Operator& op, double tol) {
  if (!is_hermitian(op, tol)) return false;
  return hermitian_eigenvalues(op, tol).back() >= -tol;
}

bool is_projection(const Operator& op, double tol) {
  if (!is_hermitian(op, tol)) return false;
  return (op.matrix() * op.matrix() - op.matrix()).norm() <= tol;
}

Operator pauli_x() {
  CMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return Operator(std::move(m));
}

Operator pauli_y() {
  CMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return Operator(std::move(m));
}

Operator pauli_z() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return Operator(std::move(m));
}

}  // namespace qdiscrim
