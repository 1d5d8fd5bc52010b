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

#include "qdiscrim/scheme.hpp"

#include <cmath>

#include "qdiscrim/random.hpp"

namespace qdiscrim {

namespace {

using Index = Eigen::Index;

constexpr double kMinOutcomeProbability = 1e-12;

void require_object_dim(const MeasurementScheme& s, const PureState& state, const char* what) {
  if (state.dim() != s.object_dim()) {
    throw DimensionError(std::string(what) + ": state has dimension " + std::to_string(state.dim()) +
                         ", scheme object dimension is " + std::to_string(s.object_dim()));
  }
}

double expectation(const Operator& op, const StateVector& v) {
  return v.amplitudes().dot(op.matrix() * v.amplitudes()).real();
}

}  // namespace

MeasurementScheme::MeasurementScheme(std::size_t object_dim, std::size_t probe_dim, PureState probe_init,
                                     Operator coupling, Povm pointer, double tol)
    : object_dim_(object_dim),
      probe_dim_(probe_dim),
      probe_init_(std::move(probe_init)),
      coupling_(std::move(coupling)),
      pointer_(std::move(pointer)) {
  if (object_dim_ == 0 || probe_dim_ == 0) throw DimensionError("MeasurementScheme: zero dimension");
  if (probe_init_.dim() != probe_dim_) throw DimensionError("MeasurementScheme: probe state dimension mismatch");
  if (coupling_.dim() != object_dim_ * probe_dim_) {
    throw DimensionError("MeasurementScheme: coupling must act on object ⊗ probe (dimension " +
                         std::to_string(object_dim_ * probe_dim_) + ")");
  }
  if (!is_unitary(coupling_, tol)) throw DomainError("MeasurementScheme: coupling is not unitary");
  if (pointer_.dim() != probe_dim_) throw DimensionError("MeasurementScheme: pointer dimension mismatch");
  for (const auto& o : pointer_.outcomes()) {
    if (!is_projection(o.effect.matrix(), tol)) {
      throw DomainError("MeasurementScheme: pointer effect '" + o.label + "' is not a projection");
    }
  }
}

StateVector MeasurementScheme::evolve(const PureState& state) const {
  return coupling_ * tensor_product(state.vector(), probe_init_.vector());
}

Operator MeasurementScheme::pointer_projection(std::size_t k) const {
  return tensor_product(Operator::identity(object_dim_), pointer_.effect(k).matrix());
}

Povm induced_observable(const MeasurementScheme& s) {
  const Index d = static_cast<Index>(s.object_dim());
  const Index joint = static_cast<Index>(s.object_dim() * s.probe_dim());

  // Columns U(|j⟩ ⊗ φ): an isometry from the object space into the joint space.
  CMatrix iso(joint, d);
  for (Index j = 0; j < d; ++j) {
    const StateVector in = tensor_product(StateVector::basis(s.object_dim(), static_cast<std::size_t>(j)),
                                          s.probe_init().vector());
    iso.col(j) = s.coupling().matrix() * in.amplitudes();
  }

  std::vector<PovmElement> elements;
  elements.reserve(s.pointer().size());
  for (std::size_t k = 0; k < s.pointer().size(); ++k) {
    const CMatrix e = iso.adjoint() * s.pointer_projection(k).matrix() * iso;
    elements.push_back({s.pointer().label(k), Operator(0.5 * (e + e.adjoint()))});
  }
  return Povm(std::move(elements));
}

std::vector<OutcomeProbability> outcome_probabilities(const MeasurementScheme& s, const PureState& state) {
  require_object_dim(s, state, "outcome_probabilities");
  const StateVector joint = s.evolve(state);
  std::vector<OutcomeProbability> out;
  out.reserve(s.pointer().size());
  for (std::size_t k = 0; k < s.pointer().size(); ++k) {
    out.push_back({s.pointer().label(k), expectation(s.pointer_projection(k), joint)});
  }
  return out;
}

OutcomeRecord conditional_post_state(const MeasurementScheme& s, const PureState& state,
                                     const std::string& label) {
  require_object_dim(s, state, "conditional_post_state");
  const std::size_t k = s.pointer().index_of(label);
  const StateVector projected = s.pointer_projection(k) * s.evolve(state);
  const double p = projected.amplitudes().squaredNorm();
  if (p <= kMinOutcomeProbability) {
    throw DomainError("conditional_post_state: outcome '" + label + "' has zero probability");
  }
  const Operator reduced = partial_trace(Operator::projector(projected), Subsystem::First,
                                         {s.object_dim(), s.probe_dim()});
  return {label, p, DensityOperator(Complex(1.0 / p) * reduced)};
}

std::vector<TrivialFlag> detect_trivial_effects(const MeasurementScheme& s, double tol) {
  const Povm induced = induced_observable(s);
  const auto d = static_cast<double>(s.object_dim());
  std::vector<TrivialFlag> out;
  for (std::size_t k = 0; k < induced.size(); ++k) {
    const Operator& e = induced.effect(k).matrix();
    const double lambda = e.trace().real() / d;
    const double residual = frobenius_norm(e - Complex(lambda) * Operator::identity(s.object_dim()));
    out.push_back({induced.label(k), residual <= tol ? std::optional<double>(lambda) : std::nullopt});
  }
  return out;
}

NoGoReport scheme_no_go_check(const MeasurementScheme& s, const PureState& phi, const PureState& psi,
                              double tol) {
  require_object_dim(s, phi, "scheme_no_go_check");
  require_object_dim(s, psi, "scheme_no_go_check");
  const std::size_t n = s.pointer().size();
  if (n > 20) throw DomainError("scheme_no_go_check: too many pointer outcomes for subset enumeration");

  const StateVector u_phi = s.evolve(phi);
  const StateVector u_psi = s.evolve(psi);

  // Outcome projections are orthogonal, so subset statistics add up.
  std::vector<double> ret(n), leak(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Operator q = s.pointer_projection(k);
    ret[k] = expectation(q, u_phi);
    leak[k] = expectation(q, u_psi);
  }

  NoGoReport r{};
  r.overlap_squared = std::norm(inner_product(phi.vector(), psi.vector()));
  r.joint_overlap = std::abs(inner_product(u_phi, u_psi));
  r.perfect_discrimination = false;
  r.leakage_bound_holds = true;

  double best_score = -2.0;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    PointerSubsetStats st{{}, 0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1U) {
        st.labels.push_back(s.pointer().label(k));
        st.retention += ret[k];
        st.leakage += leak[k];
      }
    }
    if (st.retention >= 1.0 - tol && st.leakage <= tol) r.perfect_discrimination = true;
    if (st.retention >= 1.0 - tol) {
      // leakage ≥ (|⟨φ|ψ⟩| − √ε)² ≥ |⟨φ|ψ⟩|² − 2√ε, with ε = 1 − retention.
      const double eps = std::max(0.0, 1.0 - st.retention);
      if (st.leakage < r.overlap_squared - tol - 2.0 * std::sqrt(eps)) r.leakage_bound_holds = false;
    }
    if (st.retention - st.leakage > best_score) {
      best_score = st.retention - st.leakage;
      r.best = st;
    }
    r.subsets.push_back(std::move(st));
  }
  return r;
}

Operator swap_coupling(std::size_t dim) {
  const Index d = static_cast<Index>(dim);
  CMatrix m = CMatrix::Zero(d * d, d * d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) m(j * d + i, i * d + j) = 1.0;
  }
  return Operator(std::move(m));
}

Operator cnot_coupling() {
  CMatrix m = CMatrix::Zero(4, 4);
  m(0, 0) = 1.0;
  m(1, 1) = 1.0;
  m(2, 3) = 1.0;
  m(3, 2) = 1.0;
  return Operator(std::move(m));
}

Povm computational_pointer(std::size_t dim) {
  std::vector<PovmElement> els;
  for (std::size_t k = 0; k < dim; ++k) {
    els.push_back({std::to_string(k), Operator::projector(StateVector::basis(dim, k))});
  }
  return Povm(std::move(els));
}

MeasurementScheme basis_pointer_scheme(std::size_t object_dim, std::size_t probe_dim, Operator coupling) {
  return MeasurementScheme(object_dim, probe_dim, PureState(StateVector::basis(probe_dim, 0)),
                           std::move(coupling), computational_pointer(probe_dim));
}

MeasurementScheme random_scheme(std::size_t object_dim, std::size_t probe_dim, Rng& rng) {
  const Operator coupling = haar_unitary(object_dim * probe_dim, rng);
  const Operator basis = haar_unitary(probe_dim, rng);
  std::vector<PovmElement> pointer;
  for (std::size_t k = 0; k < probe_dim; ++k) {
    const StateVector v(basis.matrix().col(static_cast<Index>(k)));
    pointer.push_back({std::to_string(k), Operator::projector(v)});
  }
  PureState init = random_pure_state(probe_dim, rng);
  return MeasurementScheme(object_dim, probe_dim, std::move(init), coupling, Povm(std::move(pointer)));
}

MeasurementScheme undisturbing_outcome_scheme(std::size_t object_dim, std::size_t probe_dim, Rng& rng) {
  if (probe_dim < 3) throw DomainError("undisturbing_outcome_scheme: probe dimension must be at least 3");
  const Index dp = static_cast<Index>(probe_dim);
  const Index joint = static_cast<Index>(object_dim) * dp;

  // Joint indices with probe component ≥ 1 carry the random block.
  std::vector<Index> active;
  for (Index i = 0; i < joint; ++i) {
    if (i % dp != 0) active.push_back(i);
  }
  const Operator block = haar_unitary(active.size(), rng);
  CMatrix u = CMatrix::Identity(joint, joint);
  for (std::size_t r = 0; r < active.size(); ++r) {
    for (std::size_t c = 0; c < active.size(); ++c) {
      u(active[r], active[c]) = block.matrix()(static_cast<Index>(r), static_cast<Index>(c));
    }
  }

  const double angle = 0.2 + 1.1 * rng.uniform();
  CVector init = CVector::Zero(dp);
  init(0) = std::cos(angle);
  init(1) = std::sin(angle);
  return MeasurementScheme(object_dim, probe_dim, PureState(StateVector(init)), Operator(std::move(u)),
                           computational_pointer(probe_dim));
}

}  // namespace qdiscrim
