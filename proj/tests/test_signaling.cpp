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

#include <cmath>
#include <numbers>

#include "qdiscrim/random.hpp"
#include "qdiscrim/signaling.hpp"

using namespace qdiscrim;

namespace {

SpinDirection random_direction(Rng& rng) {
  return SpinDirection::from_angles(std::acos(2.0 * rng.uniform() - 1.0), 2.0 * std::numbers::pi * rng.uniform());
}

bool is_half_identity(const DensityOperator& rho) {
  return frobenius_norm(rho.matrix() - Complex(0.5) * Operator::identity(2)) < 1e-12;
}

}  // namespace

TEST_SUITE("signaling") {
  TEST_CASE("protocol validation") {
    const Effect e(Complex(0.5) * Operator::identity(2));
    CHECK_THROWS_AS(SignalingProtocol({SpinDirection::x_axis()}, e), DomainError);
    CHECK_THROWS_AS(SignalingProtocol({SpinDirection::x_axis(), SpinDirection::y_axis()}, e, {0.5, 0.6}), DomainError);
    CHECK_THROWS_AS(SignalingProtocol({SpinDirection::x_axis(), SpinDirection::y_axis()}, e, {1.0}), DomainError);
    const Effect big(Complex(0.5) * Operator::identity(3));
    CHECK_THROWS_AS(SignalingProtocol({SpinDirection::x_axis(), SpinDirection::y_axis()}, big), DimensionError);
    const SignalingProtocol p({SpinDirection::x_axis(), SpinDirection::z_axis()}, e);
    CHECK(p.priors() == std::vector<double>{0.5, 0.5});
    CHECK(p.decision().size() == 2);
  }

  TEST_CASE("collapse on Bob's outcome leaves Abner with the opposite spin") {
    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
      const SpinDirection n = random_direction(rng);
      for (int sign : {+1, -1}) {
        const CollapsedState c = collapse_on_bob_outcome(n, sign);
        CHECK(c.probability == doctest::Approx(0.5).epsilon(1e-12));
        const Operator expected = Operator::projector(spin_state(n, -sign).vector());
        CHECK(frobenius_norm(c.state.matrix() - expected) < 1e-12);
      }
    }
  }

  TEST_CASE("conditional ensembles are all half the identity") {
    CHECK(is_half_identity(conditional_ensemble(SpinDirection::x_axis())));
    CHECK(is_half_identity(conditional_ensemble(SpinDirection::z_axis())));
    CHECK(is_half_identity(unmeasured_ensemble()));
    Rng rng(2);
    for (int t = 0; t < 20; ++t) CHECK(is_half_identity(conditional_ensemble(random_direction(rng))));
  }

  TEST_CASE("inference success is one half") {
    CHECK(inference_success(SignalingProtocol::default_xy()) == doctest::Approx(0.5).epsilon(1e-15));
    const std::vector<SpinDirection> xy{SpinDirection::x_axis(), SpinDirection::y_axis()};
    CHECK(inference_success(SignalingProtocol(xy, Effect(Complex(0.5) * Operator::identity(2)))) ==
          doctest::Approx(0.5).epsilon(1e-15));
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
      const SpinDirection a = random_direction(rng);
      const SpinDirection b = random_direction(rng);
      const Effect e = random_effect(2, rng);
      CHECK(std::abs(inference_success(SignalingProtocol({a, b}, e)) - 0.5) < 1e-15);
      const SignalingProtocol p({a, b}, e, {0.3, 0.7});
      const double pe = inference_success(p);
      // With unequal priors: p0 Tr[E/2] + p1 Tr[(I-E)/2].
      const double expected = 0.3 * 0.5 * p.decision().effect(0).matrix().trace().real() +
                              0.7 * 0.5 * p.decision().effect(1).matrix().trace().real();
      CHECK(std::abs(pe - expected) < 1e-14);
    }
    const Povm three({{"0", Complex(1.0 / 3.0) * Operator::identity(2)},
                      {"1", Complex(1.0 / 3.0) * Operator::identity(2)},
                      {"2", Complex(1.0 / 3.0) * Operator::identity(2)}});
    const SignalingProtocol p3({SpinDirection::x_axis(), SpinDirection::y_axis(), SpinDirection::z_axis()}, three);
    CHECK_THROWS_AS(inference_success(p3), DomainError);
  }

  TEST_CASE("Monte Carlo success rate brackets one half with no information") {
    const SignalingSummary s = simulate_signaling(SignalingProtocol::default_xy(), 1'000'000, 17, 2);
    CHECK(s.success_rate >= 0.498);
    CHECK(s.success_rate <= 0.502);
    CHECK(s.mutual_information_bits < 1e-3);
    std::uint64_t total = 0;
    for (const auto& row : s.log.counts)
      for (auto c : row) total += c;
    CHECK(total == s.log.n_trials);
    CHECK(s.standard_error == doctest::Approx(std::sqrt(0.25 / 1e6)).epsilon(1e-3));
  }

  TEST_CASE("random protocols stay within binomial bands") {
    Rng rng(4);
    for (int t = 0; t < 20; ++t) {
      const SignalingProtocol p({random_direction(rng), random_direction(rng)}, random_effect(2, rng));
      const SignalingSummary s = simulate_signaling(p, 100'000, 100 + static_cast<std::uint64_t>(t), 1);
      const double exact = inference_success(p);
      const double sigma = std::sqrt(exact * (1.0 - exact) / 1e5);
      CHECK(std::abs(s.success_rate - exact) <= 4.0 * sigma);
      CHECK(std::abs(exact - 0.5) < 1e-12);
      CHECK(s.mutual_information_bits <= 5e-3);
    }
  }

  TEST_CASE("decision marginal does not depend on what Bob measures") {
    const Effect e(Operator::projector(spin_state(SpinDirection::x_axis(), +1).vector()));
    const double unmeasured = born_probability(e, unmeasured_ensemble());
    const std::uint64_t n = 200'000;
    for (const auto& dir : {SpinDirection::x_axis(), SpinDirection::y_axis()}) {
      const SignalingProtocol p({dir, dir}, e);
      const SignalingSummary s = simulate_signaling(p, n, 9, 1);
      CHECK(std::abs(s.decision_marginal[0] - unmeasured) <= 4.0 * std::sqrt(0.25 / static_cast<double>(n)));
    }
    CHECK(unmeasured == doctest::Approx(0.5));
  }

  TEST_CASE("same letter twice gives success one half") {
    const Effect e(Operator::projector(spin_state(SpinDirection::x_axis(), +1).vector()));
    const SignalingProtocol p({SpinDirection::x_axis(), SpinDirection::x_axis()}, e);
    CHECK(inference_success(p) == doctest::Approx(0.5));
    const SignalingSummary s = simulate_signaling(p, 100'000, 3, 1);
    CHECK(std::abs(s.success_rate - 0.5) < 4.0 * std::sqrt(0.25 / 1e5));
  }

  TEST_CASE("simulation is deterministic across runs and worker counts") {
    const SignalingProtocol p = SignalingProtocol::default_xy();
    std::vector<TrialRecord> r1;
    std::vector<TrialRecord> r4;
    const SignalingSummary a = simulate_signaling(p, 150'000, 5, 1, &r1);
    const SignalingSummary b = simulate_signaling(p, 150'000, 5, 4, &r4);
    CHECK(a.log.counts == b.log.counts);
    CHECK(a.success_rate == b.success_rate);
    REQUIRE(r1.size() == r4.size());
    bool same = true;
    for (std::size_t i = 0; i < r1.size(); ++i) {
      same = same && r1[i].letter == r4[i].letter && r1[i].bob_outcome == r4[i].bob_outcome &&
             r1[i].decision == r4[i].decision;
    }
    CHECK(same);
    CHECK(simulate_signaling(p, 150'000, 6, 1).log.counts != a.log.counts);
    CHECK_THROWS_AS(simulate_signaling(p, 0, 1), DomainError);
  }

  TEST_CASE("N-letter protocol simulates at chance") {
    const Povm three({{"0", Complex(0.2) * Operator::identity(2) + Complex(0.1) * pauli_x()},
                      {"1", Complex(0.4) * Operator::identity(2) - Complex(0.1) * pauli_x()},
                      {"2", Complex(0.4) * Operator::identity(2)}});
    const SignalingProtocol p({SpinDirection::x_axis(), SpinDirection::y_axis(), SpinDirection::z_axis()}, three);
    const SignalingSummary s = simulate_signaling(p, 300'000, 2, 1);
    const double chance = (0.2 + 0.4 + 0.4) / 3.0;
    CHECK(std::abs(s.success_rate - chance) < 4.0 * std::sqrt(chance * (1.0 - chance) / 3e5));
    CHECK(s.mutual_information_bits < 1e-3);
  }

  TEST_CASE("mutual information estimator") {
    CHECK(mutual_information_bits({{50, 0}, {0, 50}}) == doctest::Approx(1.0));
    CHECK(mutual_information_bits({{25, 25}, {25, 25}}) == doctest::Approx(0.0));
    CHECK(mutual_information_bits({{0, 0}, {0, 0}}) == 0.0);
  }

  TEST_CASE("singlet outcomes are perfectly anticorrelated along any common axis") {
    Rng rng(6);
    for (const auto& dir : {SpinDirection::z_axis(), SpinDirection::x_axis(), random_direction(rng)}) {
      const JointCounts c = singlet_outcome_correlation(dir, 10'000, 3, 2);
      CHECK(c.counts[0][0] == 0);
      CHECK(c.counts[1][1] == 0);
      CHECK(c.anticorrelation() == 1.0);
      const double p = static_cast<double>(c.counts[0][1]) / 1e4;
      CHECK(std::abs(p - 0.5) <= 3.0 * std::sqrt(0.25 / 1e4));
    }
  }
}
