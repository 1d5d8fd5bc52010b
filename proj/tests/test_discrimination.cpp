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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "qdiscrim/discrimination.hpp"
#include "qdiscrim/random.hpp"

using namespace qdiscrim;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

PureState plus_x() { return spin_state(SpinDirection::x_axis(), +1); }
PureState plus_y() { return spin_state(SpinDirection::y_axis(), +1); }
PureState ket(std::size_t i) { return PureState(StateVector::basis(2, i)); }

double overlap(const PureState& a, const PureState& b) { return std::abs(inner_product(a.vector(), b.vector())); }

PureState with_phase(const PureState& s, double theta) {
  return PureState(StateVector(std::polar(1.0, theta) * s.vector().amplitudes()));
}

}  // namespace

TEST_SUITE("discrimination") {
  TEST_CASE("priors") {
    CHECK(PriorPair().phi() == 0.5);
    CHECK(PriorPair(0.3).psi() == doctest::Approx(0.7));
    CHECK_THROWS_AS(PriorPair(1.2), DomainError);
    CHECK_THROWS_AS(PriorPair(-0.1), DomainError);
  }

  TEST_CASE("Helstrom examples") {
    const MinErrorResult xy = helstrom(plus_x(), plus_y());
    CHECK(std::abs(xy.p_success - 0.25 * (2.0 + std::sqrt(2.0))) < 1e-12);
    CHECK(xy.overlap == doctest::Approx(kR));
    CHECK(is_projection(xy.effect.matrix()));
    CHECK(std::abs(min_error_success(xy.effect, plus_x(), plus_y()) - xy.p_success) < 1e-12);

    CHECK(helstrom(ket(0), ket(1)).p_success == doctest::Approx(1.0).epsilon(1e-12));
    const MinErrorResult same = helstrom(plus_x(), plus_x());
    CHECK(same.p_success == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(is_projection(same.effect.matrix()));
  }

  TEST_CASE("Helstrom matches the closed form on random pairs of any dimension") {
    Rng rng(1);
    for (int t = 0; t < 100; ++t) {
      const std::size_t d = 2 + static_cast<std::size_t>(t % 4);
      const PureState phi = random_pure_state(d, rng);
      const PureState psi = random_pure_state(d, rng);
      const MinErrorResult r = helstrom(phi, psi);
      CHECK(std::abs(r.p_success - oracle::helstrom_equal_priors(overlap(phi, psi))) < 1e-9);
      CHECK(std::abs(min_error_success(r.effect, phi, psi) - r.p_success) < 1e-9);
      CHECK(frobenius_norm(r.effect.matrix() * r.effect.matrix() - r.effect.matrix()) < 1e-9);
    }
  }

  TEST_CASE("Helstrom with unequal priors beats every random effect") {
    Rng rng(2);
    for (int t = 0; t < 20; ++t) {
      const PureState phi = random_pure_state(2, rng);
      const PureState psi = random_pure_state(2, rng);
      const PriorPair priors(rng.uniform());
      const MinErrorResult r = helstrom(phi, psi, priors);
      // Pure-state two-prior optimum ½(1 + √(1 − 4 p q c²)).
      const double c2 = std::norm(inner_product(phi.vector(), psi.vector()));
      CHECK(r.p_success ==
            doctest::Approx(0.5 * (1.0 + std::sqrt(1.0 - 4.0 * priors.phi() * priors.psi() * c2))).epsilon(1e-9));
      for (int k = 0; k < 50; ++k) {
        CHECK(min_error_success(random_effect(2, rng), phi, psi, priors) <= r.p_success + 1e-12);
      }
    }
    CHECK_THROWS_AS(helstrom(plus_x(), PureState(StateVector::basis(3, 0))), DimensionError);
  }

  TEST_CASE("unambiguous examples") {
    const UnambiguousResult xy = unambiguous(plus_x(), plus_y());
    CHECK(std::abs(xy.p_success - (1.0 - kR)) < 1e-12);
    CHECK(std::abs(xy.e1 - 1.0 / (1.0 + kR)) < 1e-12);
    CHECK(xy.e2 == xy.e1);
    CHECK(xy.w == doctest::Approx(0.5));
    CHECK_FALSE(xy.degenerate);

    const UnambiguousResult orth = unambiguous(ket(0), ket(1));
    CHECK(orth.e1 == 1.0);
    CHECK(orth.e2 == 1.0);
    CHECK(orth.p_success == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(is_projection(orth.effects.effect(0).matrix()));
    CHECK(is_projection(orth.effects.effect(1).matrix()));
    CHECK(frobenius_norm(orth.effects.effect(2).matrix()) < 1e-12);

    const UnambiguousResult same = unambiguous(plus_x(), with_phase(plus_x(), 0.7));
    CHECK(same.degenerate);
    CHECK(same.p_success == 0.0);

    double previous = 1.0;
    for (double eps : {1e-1, 1e-2, 1e-4, 1e-6}) {
      const PureState near = PureState::normalized(StateVector{1.0, eps});
      const double p = unambiguous(ket(0), near).p_success;
      CHECK(p < previous);
      previous = p;
    }
    CHECK(previous < 1e-5);
    CHECK_THROWS_AS(unambiguous(PureState(StateVector::basis(3, 0)), PureState(StateVector::basis(3, 1))),
                    DimensionError);
  }

  TEST_CASE("unambiguous effects never misidentify and are unsharp for overlapping pairs") {
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
      const PureState phi = random_pure_state(2, rng);
      const PureState psi = random_pure_state(2, rng);
      const UnambiguousResult r = unambiguous(phi, psi);
      const double c = overlap(phi, psi);
      CHECK(born_probability(r.effects.effect(1), phi) <= 1e-12);
      CHECK(born_probability(r.effects.effect(0), psi) <= 1e-12);
      CHECK(std::abs(r.p_success - oracle::unambiguous_optimum(c)) < 1e-9);
      CHECK(std::abs(unambiguous_success(r.effects, phi, psi) - r.p_success) < 1e-9);
      CHECK(std::abs(r.w - (1.0 - c * c)) < 1e-9);
      CHECK(std::abs(r.e1 - 1.0 / (1.0 + c)) < 1e-9);
      CHECK(validate_povm(r.effects).valid);
      CHECK(hermitian_eigenvalues(r.effects.effect(0).matrix())[0] < 1.0);
      CHECK(hermitian_eigenvalues(r.effects.effect(2).matrix())[1] >= -1e-12);
      CHECK(r.p_success < helstrom(phi, psi).p_success);
    }
  }

  TEST_CASE("success probabilities depend only on the overlap modulus") {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
      const PureState phi = random_pure_state(2, rng);
      const PureState psi = random_pure_state(2, rng);
      const double theta = 2.0 * std::numbers::pi * rng.uniform();
      CHECK(std::abs(helstrom(with_phase(phi, theta), psi).p_success - helstrom(phi, psi).p_success) < 1e-9);
      CHECK(std::abs(unambiguous(with_phase(phi, theta), psi).p_success - unambiguous(phi, psi).p_success) < 1e-9);
    }
  }

  TEST_CASE("positivity constraint examples") {
    for (double w : {0.0, 0.3, 0.5, 0.99}) {
      const double e = 1.0 / (1.0 + std::sqrt(1.0 - w));
      CHECK(std::abs(positivity_residual(e, e, w)) < 1e-12);
      CHECK(positivity_constraint(e, e, w));
      CHECK(positivity_residual(1.0, 1.0, w) == doctest::Approx(w - 1.0));
      CHECK(positivity_constraint(0.0, 0.0, w));
    }
    CHECK_FALSE(positivity_constraint(1.0, 1.0, 0.5));
  }

  TEST_CASE("positivity constraint agrees with the spectrum of the inconclusive effect") {
    Rng rng(5);
    for (int t = 0; t < 500; ++t) {
      const PureState phi = random_pure_state(2, rng);
      const PureState psi = random_pure_state(2, rng);
      const double e1 = rng.uniform();
      const double e2 = rng.uniform();
      const double w = 1.0 - std::norm(inner_product(phi.vector(), psi.vector()));
      const Operator id = Operator::identity(2);
      const Operator e3 = id - Complex(e1) * (id - Operator::projector(psi.vector())) -
                          Complex(e2) * (id - Operator::projector(phi.vector()));
      const auto ref = oracle::eig2(e3(0, 0).real(), e3(0, 1), e3(1, 1).real());
      if (std::abs(ref[1]) < 1e-9) continue;
      CHECK(positivity_constraint(e1, e2, w) == (ref[1] >= 0.0));
      CHECK(std::abs(positivity_residual(e1, e2, w) - ref[0] * ref[1]) < 1e-12);
    }
  }

  TEST_CASE("rotation to the common span and embedding") {
    Rng rng(6);
    for (std::size_t d : {2u, 3u, 5u}) {
      const PureState phi = random_pure_state(d, rng);
      const PureState psi = random_pure_state(d, rng);
      const CommonSpan span = rotate_to_common_span(phi, psi);
      CHECK(std::abs(overlap(span.phi, span.psi) - overlap(phi, psi)) < 1e-12);
      const CMatrix back = span.basis * span.psi.vector().amplitudes();
      CHECK(std::abs(std::abs(back.col(0).dot(psi.vector().amplitudes())) - 1.0) < 1e-12);
      const UnambiguousResult r = unambiguous(span.phi, span.psi);
      const Povm full = embed_povm(span, r.effects);
      CHECK(full.dim() == d);
      CHECK(std::abs(unambiguous_success(full, phi, psi) - r.p_success) < 1e-12);
      CHECK(born_probability(full.effect(1), phi) <= 1e-12);
      CHECK(born_probability(full.effect(0), psi) <= 1e-12);
    }
  }

  TEST_CASE("min-error oracle") {
    const MinErrorOracle xy = brute_force_min_error(plus_x(), plus_y(), PriorPair(), 100);
    CHECK(std::abs(xy.p_success - 0.25 * (2.0 + std::sqrt(2.0))) < 2e-3);
    CHECK(xy.p_success <= 0.25 * (2.0 + std::sqrt(2.0)) + 1e-12);
    // (alpha, beta) along n and (beta, alpha) along -n give the same effect,
    // so check the effect the oracle reports rather than its parameters.
    const SpinDirection n = SpinDirection::from_angles(xy.polar, xy.azimuth);
    const Operator pi = Operator::projector(spin_state(n, +1).vector());
    const Effect e(Complex(xy.alpha) * pi + Complex(xy.beta) * (Operator::identity(2) - pi));
    CHECK(min_error_success(e, plus_x(), plus_y()) == doctest::Approx(xy.p_success).epsilon(1e-12));
    CHECK(std::abs(xy.alpha - xy.beta) == doctest::Approx(1.0));
    CHECK(std::abs(brute_force_min_error(ket(0), ket(1), PriorPair(), 100).p_success - 1.0) < 1e-3);
    CHECK_THROWS_AS(brute_force_min_error(plus_x(), plus_y(), PriorPair(), 49), DomainError);
  }

  TEST_CASE("unambiguous oracle") {
    const UnambiguousOracle xy = brute_force_unambiguous(plus_x(), plus_y(), 200);
    CHECK(std::abs(xy.p_success - (1.0 - kR)) < 2e-3);
    CHECK(xy.p_success <= 1.0 - kR + 1e-12);
    CHECK(std::abs(xy.e1 - xy.e2) <= 1.0 / 200.0);
    CHECK(xy.maximizers >= 1);
    CHECK(std::abs(brute_force_unambiguous(ket(0), ket(1), 200).p_success - 1.0) < 1e-2);
  }

  TEST_CASE("oracles agree with the closed forms on random pairs and across worker counts") {
    Rng rng(7);
    for (int t = 0; t < 10; ++t) {
      const PureState phi = random_pure_state(2, rng);
      const PureState psi = random_pure_state(2, rng);
      const MinErrorOracle m1 = brute_force_min_error(phi, psi, PriorPair(), 60, 1);
      const MinErrorOracle m3 = brute_force_min_error(phi, psi, PriorPair(), 60, 3);
      CHECK(m1.p_success == m3.p_success);
      CHECK(m1.polar == m3.polar);
      CHECK(std::abs(m1.p_success - helstrom(phi, psi).p_success) < 5e-3);
      const UnambiguousOracle u1 = brute_force_unambiguous(phi, psi, 200, 1);
      const UnambiguousOracle u3 = brute_force_unambiguous(phi, psi, 200, 3);
      CHECK(u1.p_success == u3.p_success);
      CHECK(u1.e1 == u3.e1);
      CHECK(std::abs(u1.p_success - unambiguous(phi, psi).p_success) < 5e-3);
    }
  }

  TEST_CASE("sampling the unambiguous POVM reproduces its success probability") {
    const PureState phi = plus_x();
    const PureState psi = plus_y();
    const UnambiguousResult r = unambiguous(phi, psi);
    std::array<std::vector<double>, 2> table;
    for (int s = 0; s < 2; ++s) {
      for (const auto& o : r.effects.outcomes()) table[s].push_back(std::max(0.0, born_probability(o.effect, s == 0 ? phi : psi)));
    }
    Rng rng(8);
    const int n = 1'000'000;
    int correct = 0;
    int wrong = 0;
    for (int t = 0; t < n; ++t) {
      const std::size_t which = rng.uniform() < 0.5 ? 0 : 1;
      const std::size_t k = rng.categorical(table[which]);
      if (k == which) ++correct;
      if (k + which == 1) ++wrong;
    }
    const double rate = static_cast<double>(correct) / n;
    const double se = std::sqrt(r.p_success * (1.0 - r.p_success) / n);
    CHECK(std::abs(rate - r.p_success) < 3.0 * se);
    CHECK(wrong == 0);
  }
}
