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

#include "qdiscrim/discrimination.hpp"

#include <cmath>
#include <numbers>

#include "qdiscrim/parallel.hpp"

namespace qdiscrim {

namespace {

using Index = Eigen::Index;

// Eigenvalues this close to zero are left out of the positive spectral projection.
constexpr double kZeroEigenvalue = 1e-12;
// Overlap above which two states count as equal up to phase.
constexpr double kDegenerateOverlap = 1.0 - 1e-12;
// Grid values this close to the best count as tied maxima.
constexpr double kOracleTie = 1e-12;

void require_same_dim(const PureState& phi, const PureState& psi, const char* what) {
  if (phi.dim() != psi.dim()) {
    throw DimensionError(std::string(what) + ": states have dimensions " + std::to_string(phi.dim()) +
                         " and " + std::to_string(psi.dim()));
  }
}

void require_qubits(const PureState& phi, const PureState& psi, const char* what) {
  require_same_dim(phi, psi, what);
  if (phi.dim() != 2) {
    throw DimensionError(std::string(what) +
                         ": defined for two-dimensional states; rotate into the common span first");
  }
}

double overlap(const PureState& phi, const PureState& psi) {
  return std::min(1.0, std::abs(inner_product(phi.vector(), psi.vector())));
}

// Best grid point of one oracle slice; ties keep the lowest index.
struct Candidate {
  double p = -1.0;
  std::size_t a = 0, b = 0, c = 0, d = 0;
};

}  // namespace

PriorPair::PriorPair(double prior_phi) : phi_(prior_phi) {
  if (!(prior_phi >= 0.0 && prior_phi <= 1.0)) throw DomainError("PriorPair: prior must lie in [0, 1]");
}

double min_error_success(const Effect& e, const PureState& phi, const PureState& psi, PriorPair priors) {
  return priors.phi() * born_probability(e, phi) + priors.psi() * (1.0 - born_probability(e, psi));
}

MinErrorResult helstrom(const PureState& phi, const PureState& psi, PriorPair priors) {
  require_same_dim(phi, psi, "helstrom");
  const Operator gamma = Complex(priors.phi()) * Operator::projector(phi.vector()) -
                         Complex(priors.psi()) * Operator::projector(psi.vector());

  Operator projection = Operator::zero(phi.dim());
  for (const auto& [value, vec] : hermitian_eigensystem(gamma)) {
    if (value > kZeroEigenvalue) projection = projection + Operator::projector(vec);
  }
  Effect e(projection);
  const double p = min_error_success(e, phi, psi, priors);
  return {std::move(e), p, overlap(phi, psi)};
}

double unambiguous_success(const Povm& effects, const PureState& phi, const PureState& psi) {
  if (effects.size() < 2) throw DomainError("unambiguous_success: need at least two outcomes");
  return 0.5 * born_probability(effects.effect(0), phi) + 0.5 * born_probability(effects.effect(1), psi);
}

Povm unambiguous_family(const PureState& phi, const PureState& psi, double e1, double e2) {
  require_same_dim(phi, psi, "unambiguous_family");
  const Operator id = Operator::identity(phi.dim());
  const Operator first = Complex(e1) * (id - Operator::projector(psi.vector()));
  const Operator second = Complex(e2) * (id - Operator::projector(phi.vector()));
  return Povm({{"phi", first}, {"psi", second}, {"inconclusive", id - first - second}});
}

UnambiguousResult unambiguous(const PureState& phi, const PureState& psi) {
  require_qubits(phi, psi, "unambiguous");
  const double c = overlap(phi, psi);
  const double e = 1.0 / (1.0 + c);
  Povm effects = unambiguous_family(phi, psi, e, e);
  const double p = std::max(0.0, unambiguous_success(effects, phi, psi));
  return {e, e, 1.0 - c * c, std::move(effects), p, c, c >= kDegenerateOverlap};
}

double positivity_residual(double e1, double e2, double w) { return 1.0 - (e1 + e2) + e1 * e2 * w; }

bool positivity_constraint(double e1, double e2, double w, double tol) {
  return positivity_residual(e1, e2, w) >= -tol;
}

CommonSpan rotate_to_common_span(const PureState& phi, const PureState& psi) {
  require_same_dim(phi, psi, "rotate_to_common_span");
  const std::size_t d = phi.dim();
  if (d < 2) throw DimensionError("rotate_to_common_span: need dimension at least 2");

  const CVector& a = phi.vector().amplitudes();
  const Complex c = a.dot(psi.vector().amplitudes());
  CVector perp = psi.vector().amplitudes() - c * a;
  if (perp.norm() <= 1e-12) {
    // ψ ∝ φ: complete the basis with the first usable coordinate direction.
    for (std::size_t k = 0; k < d; ++k) {
      CVector candidate = StateVector::basis(d, k).amplitudes();
      candidate -= a.dot(candidate) * a;
      if (candidate.norm() > 1e-6) {
        perp = candidate;
        break;
      }
    }
  }
  perp /= perp.norm();

  CMatrix basis(static_cast<Index>(d), 2);
  basis.col(0) = a;
  basis.col(1) = perp;
  const CVector phi2 = basis.adjoint() * a;
  const CVector psi2 = basis.adjoint() * psi.vector().amplitudes();
  return {basis, PureState::normalized(StateVector(phi2)), PureState::normalized(StateVector(psi2))};
}

Povm embed_povm(const CommonSpan& span, const Povm& qubit_povm) {
  if (qubit_povm.dim() != 2) throw DimensionError("embed_povm: expected a qubit POVM");
  const Index d = span.basis.rows();
  const CMatrix complement = CMatrix::Identity(d, d) - span.basis * span.basis.adjoint();
  std::vector<PovmElement> els;
  for (std::size_t k = 0; k < qubit_povm.size(); ++k) {
    CMatrix m = span.basis * qubit_povm.effect(k).matrix().matrix() * span.basis.adjoint();
    if (k + 1 == qubit_povm.size()) m += complement;
    els.push_back({qubit_povm.label(k), Operator(0.5 * (m + m.adjoint()))});
  }
  return Povm(std::move(els));
}

MinErrorOracle brute_force_min_error(const PureState& phi, const PureState& psi, PriorPair priors,
                                     std::size_t resolution, std::size_t threads) {
  require_qubits(phi, psi, "brute_force_min_error");
  if (resolution < 50) throw DomainError("brute_force_min_error: resolution must be at least 50");
  const double step = 1.0 / static_cast<double>(resolution);

  std::vector<Candidate> rows(resolution + 1);
  parallel_for(resolution + 1, threads, [&](std::size_t i) {
    const double polar = std::numbers::pi * static_cast<double>(i) * step;
    Candidate best;
    for (std::size_t j = 0; j < resolution; ++j) {
      const double azimuth = 2.0 * std::numbers::pi * static_cast<double>(j) * step;
      const Effect pi(Operator::projector(spin_state(SpinDirection::from_angles(polar, azimuth), +1).vector()));
      const Effect rest = pi.complement();
      const double phi_pi = born_probability(pi, phi);
      const double phi_rest = born_probability(rest, phi);
      const double psi_pi = born_probability(pi, psi);
      const double psi_rest = born_probability(rest, psi);
      for (std::size_t ia = 0; ia <= resolution; ++ia) {
        const double alpha = static_cast<double>(ia) * step;
        for (std::size_t ib = 0; ib <= resolution; ++ib) {
          const double beta = static_cast<double>(ib) * step;
          const double p_phi = alpha * phi_pi + beta * phi_rest;
          const double p_psi = alpha * psi_pi + beta * psi_rest;
          const double p = priors.phi() * p_phi + priors.psi() * (1.0 - p_psi);
          if (p > best.p) best = {p, i, j, ia, ib};
        }
      }
    }
    rows[i] = best;
  });

  Candidate best;
  for (const auto& r : rows) {
    if (r.p > best.p) best = r;
  }
  return {best.p, std::numbers::pi * static_cast<double>(best.a) * step,
          2.0 * std::numbers::pi * static_cast<double>(best.b) * step, static_cast<double>(best.c) * step,
          static_cast<double>(best.d) * step};
}

UnambiguousOracle brute_force_unambiguous(const PureState& phi, const PureState& psi, std::size_t resolution,
                                          std::size_t threads) {
  require_qubits(phi, psi, "brute_force_unambiguous");
  if (resolution < 2) throw DomainError("brute_force_unambiguous: resolution must be at least 2");
  const double step = 1.0 / static_cast<double>(resolution);

  const Operator id = Operator::identity(2);
  const Effect not_psi(id - Operator::projector(psi.vector()));
  const Effect not_phi(id - Operator::projector(phi.vector()));
  const double hit_phi = born_probability(not_psi, phi);  // ⟨φ|(I − |ψ⟩⟨ψ|)φ⟩
  const double hit_psi = born_probability(not_phi, psi);
  const double w = 1.0 - std::norm(inner_product(phi.vector(), psi.vector()));

  std::vector<Candidate> rows(resolution + 1);
  std::vector<std::size_t> feasible(resolution + 1, 0);
  parallel_for(resolution + 1, threads, [&](std::size_t i) {
    const double e1 = static_cast<double>(i) * step;
    Candidate best;
    for (std::size_t j = 0; j <= resolution; ++j) {
      const double e2 = static_cast<double>(j) * step;
      if (!positivity_constraint(e1, e2, w)) continue;
      ++feasible[i];
      const double p = 0.5 * e1 * hit_phi + 0.5 * e2 * hit_psi;
      if (p > best.p) best = {p, i, j, 0, 0};
    }
    rows[i] = best;
  });

  Candidate best;
  std::size_t total = 0;
  for (std::size_t i = 0; i <= resolution; ++i) {
    total += feasible[i];
    if (rows[i].p > best.p) best = rows[i];
  }

  // The objective is linear, so whole segments of grid points can tie; report
  // the centroid of every point within kOracleTie of the maximum.
  std::vector<std::size_t> tie_count(resolution + 1, 0);
  std::vector<std::size_t> tie_j_sum(resolution + 1, 0);
  parallel_for(resolution + 1, threads, [&](std::size_t i) {
    const double e1 = static_cast<double>(i) * step;
    for (std::size_t j = 0; j <= resolution; ++j) {
      const double e2 = static_cast<double>(j) * step;
      if (!positivity_constraint(e1, e2, w)) continue;
      const double p = 0.5 * e1 * hit_phi + 0.5 * e2 * hit_psi;
      if (p >= best.p - kOracleTie) {
        ++tie_count[i];
        tie_j_sum[i] += j;
      }
    }
  });
  std::size_t ties = 0;
  std::size_t i_sum = 0;
  std::size_t j_sum = 0;
  for (std::size_t i = 0; i <= resolution; ++i) {
    ties += tie_count[i];
    i_sum += i * tie_count[i];
    j_sum += tie_j_sum[i];
  }
  const double n_ties = static_cast<double>(ties);
  return {best.p, static_cast<double>(i_sum) / n_ties * step, static_cast<double>(j_sum) / n_ties * step, total,
          ties};
}

}  // namespace qdiscrim
