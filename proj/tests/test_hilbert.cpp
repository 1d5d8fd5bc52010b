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

#include "oracles.hpp"
#include "qdiscrim/hilbert.hpp"
#include "qdiscrim/quantum.hpp"
#include "qdiscrim/random.hpp"

using namespace qdiscrim;

namespace {

const double kR = 1.0 / std::sqrt(2.0);

Operator random_hermitian(std::size_t d, Rng& rng) {
  const CMatrix g = ginibre(d, d, rng);
  return Operator(0.5 * (g + g.adjoint()));
}

}  // namespace

TEST_SUITE("hilbert") {
  TEST_CASE("operator rejects non-square and non-finite entries") {
    CHECK_THROWS_AS(Operator(CMatrix(2, 3)), DimensionError);
    CMatrix m = CMatrix::Identity(2, 2);
    m(0, 1) = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(Operator{m}, DomainError);
    CHECK_THROWS(Operator(CMatrix(0, 0)));
  }

  TEST_CASE("tensor product of identities and basis vectors") {
    const Operator i4 = tensor_product(Operator::identity(2), Operator::identity(2));
    CHECK(frobenius_norm(i4 - Operator::identity(4)) == 0.0);

    const StateVector v = tensor_product(StateVector{1.0, 0.0}, StateVector{0.0, 1.0});
    REQUIRE(v.dim() == 4);
    CHECK(v[0] == Complex(0.0));
    CHECK(v[1] == Complex(1.0));
    CHECK(v[2] == Complex(0.0));
    CHECK(v[3] == Complex(0.0));
  }

  TEST_CASE("singlet from tensor products has amplitudes (0, 1/sqrt2, -1/sqrt2, 0)") {
    const StateVector up{1.0, 0.0};
    const StateVector down{0.0, 1.0};
    const CVector s = kR * (tensor_product(up, down).amplitudes() - tensor_product(down, up).amplitudes());
    CHECK(std::abs(s(0)) == 0.0);
    CHECK(std::abs(s(1) - kR) < 1e-15);
    CHECK(std::abs(s(2) + kR) < 1e-15);
    CHECK(std::abs(s(3)) == 0.0);
  }

  TEST_CASE("tensor product matches explicit Kronecker loops and is associative") {
    Rng rng(11);
    for (int t = 0; t < 20; ++t) {
      const Operator a(ginibre(2, 2, rng));
      const Operator b(ginibre(3, 3, rng));
      const Operator c(ginibre(2, 2, rng));
      CHECK(oracle::max_abs_diff(tensor_product(a, b).matrix(), oracle::kron(a.matrix(), b.matrix())) < 1e-14);
      const Operator left = tensor_product(tensor_product(a, b), c);
      const Operator right = tensor_product(a, tensor_product(b, c));
      CHECK(left.dim() == 12);
      CHECK(frobenius_norm(left - right) < 1e-12);
    }
  }

  TEST_CASE("partial trace of the singlet is half the identity") {
    const Operator joint = Operator::projector(singlet().vector());
    for (auto keep : {Subsystem::First, Subsystem::Second}) {
      const Operator r = partial_trace(joint, keep, {2, 2});
      CHECK(frobenius_norm(r - Complex(0.5) * Operator::identity(2)) < 1e-15);
    }
  }

  TEST_CASE("partial trace of a product state returns the kept factor") {
    Rng rng(3);
    const DensityOperator a = random_density_operator(2, rng);
    const DensityOperator b = random_density_operator(3, rng);
    const Operator joint = tensor_product(a.matrix(), b.matrix());
    CHECK(frobenius_norm(partial_trace(joint, Subsystem::First, {2, 3}) - a.matrix()) < 1e-14);
    CHECK(frobenius_norm(partial_trace(joint, Subsystem::Second, {2, 3}) - b.matrix()) < 1e-14);
  }

  TEST_CASE("partial trace agrees with direct index summation on random density operators") {
    Rng rng(5);
    for (int t = 0; t < 20; ++t) {
      const DensityOperator rho = random_density_operator(6, rng);
      for (bool first : {true, false}) {
        const Operator r = partial_trace(rho.matrix(), first ? Subsystem::First : Subsystem::Second, {2, 3});
        CHECK(oracle::max_abs_diff(r.matrix(), oracle::partial_trace(rho.matrix().matrix(), 2, 3, first)) < 1e-14);
        CHECK(std::abs(r.trace() - Complex(1.0)) < 1e-12);
        CHECK(is_positive_semidefinite(r));
      }
    }
  }

  TEST_CASE("partial trace of A tensor B is Tr(B) A") {
    Rng rng(8);
    for (int t = 0; t < 20; ++t) {
      const Operator a(ginibre(3, 3, rng));
      const Operator b(ginibre(2, 2, rng));
      const Operator r = partial_trace(tensor_product(a, b), Subsystem::First, {3, 2});
      CHECK(frobenius_norm(r - b.trace() * a) < 1e-12);
    }
  }

  TEST_CASE("partial trace rejects mismatched dimensions") {
    CHECK_THROWS_AS(partial_trace(Operator::identity(4), Subsystem::First, {2, 3}), DimensionError);
  }

  TEST_CASE("difference of projectors with overlap 1/2 has eigenvalues +-1/sqrt2") {
    const StateVector phi{kR, kR};
    const StateVector psi{Complex(kR), Complex(0.0, kR)};
    const auto ev = hermitian_eigenvalues(Operator::projector(phi) - Operator::projector(psi));
    REQUIRE(ev.size() == 2);
    CHECK(ev[0] == doctest::Approx(kR).epsilon(1e-14));
    CHECK(ev[1] == doctest::Approx(-kR).epsilon(1e-14));
  }

  TEST_CASE("identity has eigenvalues (1, 1)") {
    const auto ev = hermitian_eigenvalues(Operator::identity(2));
    CHECK(ev[0] == 1.0);
    CHECK(ev[1] == 1.0);
  }

  TEST_CASE("2x2 spectrum matches the quadratic formula") {
    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
      const Operator h = random_hermitian(2, rng);
      const auto ev = hermitian_eigenvalues(h);
      const auto ref = oracle::eig2(h(0, 0).real(), h(0, 1), h(1, 1).real());
      CHECK(std::abs(ev[0] - ref[0]) < 1e-12);
      CHECK(std::abs(ev[1] - ref[1]) < 1e-12);
    }
  }

  TEST_CASE("eigensystem reconstructs random Hermitian operators up to dim 8") {
    Rng rng(2);
    for (std::size_t d = 1; d <= 8; ++d) {
      for (int t = 0; t < 10; ++t) {
        const Operator h = random_hermitian(d, rng);
        const auto sys = hermitian_eigensystem(h);
        REQUIRE(sys.size() == d);
        Operator rebuilt = Operator::zero(d);
        for (std::size_t i = 0; i < d; ++i) {
          if (i + 1 < d) CHECK(sys[i].value >= sys[i + 1].value);
          for (std::size_t j = 0; j < d; ++j) {
            const Complex ip = inner_product(sys[i].vector, sys[j].vector);
            CHECK(std::abs(ip - Complex(i == j ? 1.0 : 0.0)) < 1e-10);
          }
          rebuilt = rebuilt + Complex(sys[i].value) * Operator::projector(sys[i].vector);
        }
        CHECK(frobenius_norm(rebuilt - h) < 1e-10);
      }
    }
  }

  TEST_CASE("eigensystem of a degenerate 2x2 operator") {
    const auto sys = hermitian_eigensystem(Complex(3.0) * Operator::identity(2));
    CHECK(sys[0].value == 3.0);
    CHECK(sys[1].value == 3.0);
    CHECK(std::abs(inner_product(sys[0].vector, sys[1].vector)) < 1e-15);
  }

  TEST_CASE("eigensystem rejects non-Hermitian input") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(hermitian_eigensystem(Operator(m)), DomainError);
    Rng rng(1);
    CHECK_THROWS_AS(hermitian_eigensystem(Operator(ginibre(3, 3, rng))), DomainError);
  }

  TEST_CASE("density operator spectrum lies in [0, 1] and sums to 1") {
    Rng rng(4);
    for (std::size_t d = 2; d <= 6; ++d) {
      const auto ev = hermitian_eigenvalues(random_density_operator(d, rng).matrix());
      double sum = 0.0;
      for (double v : ev) {
        CHECK(v >= -1e-10);
        CHECK(v <= 1.0 + 1e-10);
        sum += v;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
    }
  }

  TEST_CASE("operator predicates") {
    CHECK(is_projection(Operator::projector(StateVector{1.0, 0.0})));
    const Operator half_x = Complex(0.5) * (Operator::identity(2) + pauli_x());
    CHECK(is_positive_semidefinite(half_x));
    CHECK(is_projection(half_x));
    CHECK(is_unitary(pauli_y()));
    CHECK(is_hermitian(pauli_y()));
    CHECK_FALSE(is_positive_semidefinite(pauli_z()));
    CHECK_FALSE(is_projection(Complex(0.5) * Operator::identity(2)));
    CHECK_FALSE(is_unitary(Complex(2.0) * Operator::identity(2)));
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_FALSE(is_hermitian(Operator(m)));
    CHECK(is_hermitian(Operator(m), 2.0));
  }

  TEST_CASE("norms") {
    CHECK(frobenius_norm(Operator::identity(4)) == doctest::Approx(2.0));
    CHECK(operator_norm(Complex(3.0) * pauli_x()) == doctest::Approx(3.0));
    CHECK(hermitian_part(pauli_x() * pauli_y()).matrix().norm() < 1e-15);
  }
}
