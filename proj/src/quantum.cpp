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

#include "qdiscrim/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <sstream>

namespace qdiscrim {

namespace {

using Index = Eigen::Index;

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// Multiplies by a global phase so the first non-negligible amplitude is real positive.
StateVector canonical_phase(const CVector& v) {
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > 1e-12) return StateVector(v * (std::conj(v(i)) / mag));
  }
  return StateVector(v);
}

}  // namespace

PureState::PureState(const StateVector& v, double tol) : v_(v) {
  const double n = v.norm();
  if (std::abs(n - 1.0) > tol) {
    throw DomainError("PureState: vector norm " + format_number(n) + " is not 1");
  }
  v_ = StateVector(v.amplitudes() / n);
}

PureState::PureState(std::initializer_list<Complex> amplitudes) : PureState(StateVector(amplitudes)) {}

PureState PureState::normalized(const StateVector& v) {
  const double n = v.norm();
  if (n == 0.0) throw DomainError("PureState::normalized: zero vector");
  return PureState(StateVector(v.amplitudes() / n));
}

DensityOperator::DensityOperator(const Operator& m, double tol) : m_(m) {
  if (!is_hermitian(m, tol)) throw DomainError("DensityOperator: not Hermitian");
  if (std::abs(m.trace() - Complex(1.0)) > tol) {
    throw DomainError("DensityOperator: trace " + format_number(m.trace().real()) + " is not 1");
  }
  if (hermitian_eigenvalues(m, tol).back() < -tol) {
    throw DomainError("DensityOperator: not positive semidefinite");
  }
  m_ = hermitian_part(m);
}

DensityOperator DensityOperator::from_pure(const PureState& s) {
  return DensityOperator(Operator::projector(s.vector()));
}

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  return DensityOperator(Complex(1.0 / static_cast<double>(dim)) * Operator::identity(dim));
}

Effect::Effect(const Operator& m, double tol) : m_(m) {
  if (!is_hermitian(m, tol)) throw DomainError("Effect: not Hermitian");
  const auto ev = hermitian_eigenvalues(m, tol);
  if (ev.back() < -tol || ev.front() > 1.0 + tol) {
    throw DomainError("Effect: spectrum [" + format_number(ev.back()) + ", " +
                      format_number(ev.front()) + "] outside [0, 1]");
  }
  m_ = hermitian_part(m);
}

Effect Effect::complement() const { return Effect(Operator::identity(dim()) - m_); }

PovmReport validate_povm(std::span<const PovmElement> elements, double tol) {
  PovmReport r;
  if (elements.empty()) {
    r.message = "no outcomes";
    return r;
  }
  const std::size_t d = elements.front().op.dim();
  std::set<std::string> labels;
  std::ostringstream problems;

  CMatrix sum = CMatrix::Zero(static_cast<Index>(d), static_cast<Index>(d));
  bool all_ok = true;
  bool all_projections = true;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    const auto& el = elements[k];
    if (el.op.dim() != d) {
      r.message = "outcome '" + el.label + "' has dimension " + std::to_string(el.op.dim()) +
                  ", expected " + std::to_string(d);
      r.effect_ok.assign(elements.size(), false);
      return r;
    }
    if (!labels.insert(el.label).second) {
      all_ok = false;
      problems << "duplicate label '" << el.label << "'; ";
    }
    sum += el.op.matrix();

    bool ok = is_hermitian(el.op, tol);
    double lo = std::numeric_limits<double>::quiet_NaN();
    double hi = lo;
    if (ok) {
      const auto ev = hermitian_eigenvalues(el.op, tol);
      lo = ev.back();
      hi = ev.front();
      ok = lo >= -tol && hi <= 1.0 + tol;
      if (!ok) problems << "effect '" << el.label << "' has spectrum outside [0, 1]; ";
    } else {
      problems << "effect '" << el.label << "' is not Hermitian; ";
    }
    r.min_eigenvalues.push_back(lo);
    r.max_eigenvalues.push_back(hi);
    r.effect_ok.push_back(ok);
    all_ok = all_ok && ok;
    all_projections = all_projections && is_projection(el.op, tol);
  }

  r.completeness_residual = (sum - CMatrix::Identity(static_cast<Index>(d), static_cast<Index>(d))).norm();
  const bool complete = r.completeness_residual <= tol;
  if (!complete) problems << "effects do not sum to the identity (residual " << r.completeness_residual << "); ";

  r.valid = all_ok && complete;
  r.sharp = r.valid && all_projections;
  r.message = r.valid ? (r.sharp ? "valid, sharp" : "valid, unsharp") : problems.str();
  if (!r.valid && r.message.size() >= 2) r.message.resize(r.message.size() - 2);
  return r;
}

Povm::Povm(std::vector<PovmElement> elements, double tol) {
  const auto report = validate_povm(elements, tol);
  if (!report.valid) throw DomainError("invalid POVM: " + report.message);
  outcomes_.reserve(elements.size());
  for (auto& el : elements) outcomes_.push_back({std::move(el.label), Effect(el.op, tol)});
}

std::size_t Povm::index_of(const std::string& label) const {
  for (std::size_t k = 0; k < outcomes_.size(); ++k) {
    if (outcomes_[k].label == label) return k;
  }
  throw DomainError("POVM has no outcome labelled '" + label + "'");
}

std::vector<PovmElement> Povm::elements() const {
  std::vector<PovmElement> out;
  out.reserve(outcomes_.size());
  for (const auto& o : outcomes_) out.push_back({o.label, o.effect.matrix()});
  return out;
}

PovmReport validate_povm(const Povm& povm, double tol) {
  const auto els = povm.elements();
  return validate_povm(els, tol);
}

SharpObservable::SharpObservable(std::vector<double> eigenvalues, std::vector<Operator> projections,
                                 double tol)
    : eigenvalues_(std::move(eigenvalues)) {
  if (eigenvalues_.empty() || eigenvalues_.size() != projections.size()) {
    throw DomainError("SharpObservable: need one projection per eigenvalue");
  }
  const std::size_t d = projections.front().dim();
  Operator sum = Operator::zero(d);
  for (std::size_t i = 0; i < projections.size(); ++i) {
    require_same_dim(projections[i].dim(), d, "SharpObservable");
    if (!is_projection(projections[i], tol)) throw DomainError("SharpObservable: not a projection");
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(eigenvalues_[i] - eigenvalues_[j]) <= tol) {
        throw DomainError("SharpObservable: eigenvalues must be distinct");
      }
      if (frobenius_norm(projections[i] * projections[j]) > tol) {
        throw DomainError("SharpObservable: projections are not orthogonal");
      }
    }
    sum = sum + projections[i];
  }
  if (frobenius_norm(sum - Operator::identity(d)) > tol) {
    throw DomainError("SharpObservable: projections do not sum to the identity");
  }
  for (const auto& p : projections) projections_.emplace_back(p, tol);
}

Povm SharpObservable::to_povm() const {
  std::vector<PovmElement> els;
  for (std::size_t k = 0; k < size(); ++k) {
    els.push_back({format_number(eigenvalues_[k]), projections_[k].matrix()});
  }
  return Povm(std::move(els));
}

SpinDirection::SpinDirection(double x, double y, double z, double tol) : n_{x, y, z} {
  const double len = std::sqrt(x * x + y * y + z * z);
  if (!std::isfinite(len) || std::abs(len - 1.0) > tol) {
    throw DomainError("SpinDirection: length " + format_number(len) + " is not 1");
  }
}

SpinDirection SpinDirection::from_angles(double polar, double azimuth) {
  return {std::sin(polar) * std::cos(azimuth), std::sin(polar) * std::sin(azimuth), std::cos(polar)};
}

Operator SpinDirection::pauli() const {
  return Operator(x() * pauli_x().matrix() + y() * pauli_y().matrix() + z() * pauli_z().matrix());
}

double born_probability(const Effect& e, const PureState& state) {
  require_same_dim(e.dim(), state.dim(), "born_probability");
  const CVector& v = state.vector().amplitudes();
  return v.dot(e.matrix().matrix() * v).real();
}

double born_probability(const Effect& e, const DensityOperator& state) {
  require_same_dim(e.dim(), state.dim(), "born_probability");
  return (state.matrix().matrix() * e.matrix().matrix()).trace().real();
}

std::string to_string(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::Real:
      return "real";
    case PropertyStatus::Absent:
      return "absent";
    case PropertyStatus::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

PropertyStatus property_status(const Operator& p, const DensityOperator& rho, double tol) {
  require_same_dim(p.dim(), rho.dim(), "property_status");
  if (!is_projection(p, tol)) throw DomainError("property_status: operator is not a projection");
  const Operator p_rho = p * rho.matrix();
  if (operator_norm(p_rho - rho.matrix()) <= tol) return PropertyStatus::Real;
  if (operator_norm(p_rho) <= tol) return PropertyStatus::Absent;
  return PropertyStatus::Indeterminate;
}

CertaintyReport effect_certainty_lemma(const Effect& e, const PureState& state, CertaintyTolerances tol) {
  require_same_dim(e.dim(), state.dim(), "effect_certainty_lemma");
  const CVector& phi = state.vector().amplitudes();
  const CVector e_phi = e.matrix().matrix() * phi;

  CertaintyReport r{};
  r.probability = phi.dot(e_phi).real();
  r.fixed_residual = (e_phi - phi).norm();
  r.annihilated_residual = e_phi.norm();
  r.probability_one = r.probability >= 1.0 - tol.probability;
  r.probability_zero = r.probability <= tol.probability;
  r.fixes_state = r.fixed_residual <= tol.vector;
  r.annihilates_state = r.annihilated_residual <= tol.vector;
  return r;
}

SharpObservable spin_component(const SpinDirection& n) {
  const Operator id = Operator::identity(2);
  const Operator ns = n.pauli();
  return SharpObservable({0.5, -0.5}, {Complex(0.5) * (id + ns), Complex(0.5) * (id - ns)});
}

PureState spin_state(const SpinDirection& n, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("spin_state: sign must be +1 or -1");
  const double c = std::sqrt(std::max(0.0, 0.5 * (1.0 + n.z())));  // cos(θ/2)
  const double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - n.z())));  // sin(θ/2)
  const double rho = std::hypot(n.x(), n.y());
  const Complex phase = rho > 0.0 ? Complex(n.x(), n.y()) / rho : Complex(1.0);

  CVector v(2);
  if (sign == 1) {
    v << c, phase * s;
  } else {
    v << s, -phase * c;
  }
  return PureState::normalized(canonical_phase(v));
}

PureState singlet() {
  const StateVector up = StateVector::basis(2, 0);
  const StateVector down = StateVector::basis(2, 1);
  const CVector psi =
      (tensor_product(up, down).amplitudes() - tensor_product(down, up).amplitudes()) / std::sqrt(2.0);
  return PureState(StateVector(psi));
}

Eigen::VectorXd hermitian_coordinates(const Operator& op) {
  const Index d = static_cast<Index>(op.dim());
  const CMatrix& m = op.matrix();
  Eigen::VectorXd out(d * d);
  Index k = 0;
  for (Index i = 0; i < d; ++i) out(k++) = m(i, i).real();
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      // Hermitian part of the off-diagonal pair, so non-Hermitian input is projected.
      const Complex a = 0.5 * (m(i, j) + std::conj(m(j, i)));
      out(k++) = std::sqrt(2.0) * a.real();
      out(k++) = std::sqrt(2.0) * a.imag();
    }
  }
  return out;
}

Operator from_hermitian_coordinates(const Eigen::VectorXd& coords, std::size_t dim) {
  const Index d = static_cast<Index>(dim);
  if (coords.size() != d * d) throw DimensionError("from_hermitian_coordinates: expected d² coordinates");
  CMatrix m = CMatrix::Zero(d, d);
  Index k = 0;
  for (Index i = 0; i < d; ++i) m(i, i) = coords(k++);
  for (Index i = 0; i < d; ++i) {
    for (Index j = i + 1; j < d; ++j) {
      const Complex a = Complex(coords(k), coords(k + 1)) / std::sqrt(2.0);
      k += 2;
      m(i, j) = a;
      m(j, i) = std::conj(a);
    }
  }
  return Operator(std::move(m));
}

std::size_t frame_rank(const Povm& povm, double tol) {
  const Index d2 = static_cast<Index>(povm.dim() * povm.dim());
  Eigen::MatrixXd frame(static_cast<Index>(povm.size()), d2);
  for (std::size_t k = 0; k < povm.size(); ++k) {
    frame.row(static_cast<Index>(k)) = hermitian_coordinates(povm.effect(k).matrix()).transpose();
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(frame);
  const auto& sv = svd.singularValues();
  const double threshold = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
  std::size_t rank = 0;
  for (Index i = 0; i < sv.size(); ++i) rank += sv(i) > threshold ? 1 : 0;
  return rank;
}

bool is_informationally_complete(const Povm& povm, double tol) {
  return frame_rank(povm, tol) == povm.dim() * povm.dim();
}

double trace_distance(const DensityOperator& rho, const DensityOperator& sigma) {
  require_same_dim(rho.dim(), sigma.dim(), "trace_distance");
  double sum = 0.0;
  for (double ev : hermitian_eigenvalues(rho.matrix() - sigma.matrix())) sum += std::abs(ev);
  return 0.5 * sum;
}

}  // namespace qdiscrim
