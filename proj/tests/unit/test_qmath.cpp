// Copyright 2026 The tsqent Authors
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
#include <vector>

#include "oracles.hpp"
#include "tsq/error.hpp"
#include "tsq/qmath.hpp"
#include "tsq/rng.hpp"

using namespace tsq;

namespace {

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

ComplexMatrix random_psd(int dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return g * g.adjoint();
}

ComplexMatrix random_hermitian(int dim, Rng& rng) {
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = rng.complex_normal();
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_SUITE("qmath") {
  TEST_CASE("kron examples") {
    CHECK(oracle::max_abs(kron(pauli::identity(), pauli::identity()) - ComplexMatrix::Identity(4, 4)) == 0.0);

    const ComplexMatrix yy = kron(pauli::y(), pauli::y());
    ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
    expected(0, 3) = -1.0;
    expected(1, 2) = 1.0;
    expected(2, 1) = 1.0;
    expected(3, 0) = -1.0;
    CHECK(oracle::max_abs(yy - expected) < 1e-15);

    const ComplexMatrix d = kron(diag2(2.0, 3.0), diag2(5.0, 7.0));
    CHECK(d(0, 0).real() == 10.0);
    CHECK(d(1, 1).real() == 14.0);
    CHECK(d(2, 2).real() == 15.0);
    CHECK(d(3, 3).real() == 21.0);
    CHECK(oracle::max_abs(d - ComplexMatrix(d.diagonal().asDiagonal())) == 0.0);
  }

  TEST_CASE("partial trace examples") {
    const std::vector<int> keep0{0};
    const DensityMatrix bell = DensityMatrix::from_pure(states::bell_phi_plus());
    CHECK(oracle::max_abs(partial_trace(bell, keep0).matrix() - 0.5 * ComplexMatrix::Identity(2, 2)) < 1e-12);

    const DensityMatrix p01 = DensityMatrix::from_pure(PureState::basis(2, 0b01));
    CHECK(oracle::max_abs(partial_trace(p01, keep0).matrix() - diag2(1.0, 0.0)) < 1e-15);
    const std::vector<int> keep1{1};
    CHECK(oracle::max_abs(partial_trace(p01, keep1).matrix() - diag2(0.0, 1.0)) < 1e-15);

    const DensityMatrix w = DensityMatrix::from_pure(states::w(3));
    CHECK(oracle::max_abs(partial_trace(w, keep0).matrix() - diag2(2.0 / 3.0, 1.0 / 3.0)) < 1e-12);
    // Pure-state overload agrees.
    CHECK(oracle::max_abs(partial_trace(states::w(3), keep0).matrix() - diag2(2.0 / 3.0, 1.0 / 3.0)) < 1e-12);

    const std::vector<int> all{0, 1, 2};
    CHECK(oracle::max_abs(partial_trace(w, all).matrix() - w.matrix()) < 1e-15);

    CHECK_THROWS_AS(partial_trace(w, std::vector<int>{}), DomainError);
    CHECK_THROWS_AS(partial_trace(w, std::vector<int>{3}), DomainError);
  }

  TEST_CASE("qubit 0 is the most significant bit") {
    // |100>: qubit 0 is 1, the others 0.
    const PureState s = PureState::basis(3, 0b100);
    const std::vector<int> keep0{0};
    const std::vector<int> keep2{2};
    CHECK(partial_trace(s, keep0).matrix()(1, 1).real() == doctest::Approx(1.0));
    CHECK(partial_trace(s, keep2).matrix()(0, 0).real() == doctest::Approx(1.0));
  }

  TEST_CASE("partial trace factorizes on products") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const DensityMatrix a = random_mixed(1, 2, seed);
      const DensityMatrix b = random_mixed(2, 3, seed + 100);
      const DensityMatrix ab(3, kron(a.matrix(), b.matrix()));
      CHECK(oracle::max_abs(partial_trace(ab, std::vector<int>{0}).matrix() - a.matrix()) <= 1e-10);
      CHECK(oracle::max_abs(partial_trace(ab, std::vector<int>{1, 2}).matrix() - b.matrix()) <= 1e-10);
    }
  }

  TEST_CASE("herm_eigs examples") {
    HermitianEigen z = herm_eigs(pauli::z());
    CHECK(z.values(0) == doctest::Approx(1.0));
    CHECK(z.values(1) == doctest::Approx(-1.0));

    HermitianEigen half = herm_eigs(0.5 * pauli::identity());
    CHECK(half.values(0) == doctest::Approx(0.5));
    CHECK(half.values(1) == doctest::Approx(0.5));

    HermitianEigen x = herm_eigs(pauli::x());
    CHECK(x.values(0) == doctest::Approx(1.0));
    CHECK(x.values(1) == doctest::Approx(-1.0));
    const double r = 1.0 / std::sqrt(2.0);
    // Phase convention makes the leading entry real positive.
    CHECK(std::abs(x.vectors(0, 0) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(x.vectors(1, 0) - Complex(r, 0)) < 1e-12);
    CHECK(std::abs(std::abs(x.vectors(0, 1)) - r) < 1e-12);
    CHECK(std::abs(x.vectors(0, 1) + x.vectors(1, 1)) < 1e-12);

    ComplexMatrix bad = pauli::x();
    bad(0, 1) = 2.0;
    CHECK_THROWS_AS(herm_eigs(bad), DomainError);
  }

  TEST_CASE("herm_eigs reconstruction and ordering") {
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const int dim = 1 + trial % 32;
      const ComplexMatrix m = random_hermitian(dim, rng);
      const HermitianEigen e = herm_eigs(m);
      const ComplexMatrix back = e.vectors * e.values.cast<Complex>().asDiagonal() * e.vectors.adjoint();
      CHECK(oracle::max_abs(back - m) <= 1e-9);
      for (int i = 1; i < dim; ++i) CHECK(e.values(i - 1) >= e.values(i));
      const RealVector only = herm_eigenvalues(m);
      CHECK((only - e.values).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }

  TEST_CASE("density matrix spectrum sums to one") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const DensityMatrix rho = random_mixed(1 + static_cast<int>(seed % 4), 1 + static_cast<int>(seed % 2), seed);
      CHECK(herm_eigs(rho.matrix()).values.sum() == doctest::Approx(1.0).epsilon(1e-9));
    }
  }

  TEST_CASE("psd_sqrt examples") {
    CHECK(oracle::max_abs(psd_sqrt(ComplexMatrix::Identity(3, 3)) - ComplexMatrix::Identity(3, 3)) < 1e-12);
    CHECK(oracle::max_abs(psd_sqrt(diag2(4.0, 9.0)) - diag2(2.0, 3.0)) < 1e-12);
    const ComplexMatrix p = states::bell_phi_plus().projector();
    CHECK(oracle::max_abs(psd_sqrt(p) - p) < 1e-8);
    CHECK_THROWS_AS(psd_sqrt(diag2(1.0, -1e-6)), DomainError);
    // Roundoff-level negatives are clamped.
    CHECK(oracle::max_abs(psd_sqrt(diag2(1.0, -1e-12)) - diag2(1.0, 0.0)) < 1e-12);
  }

  TEST_CASE("psd_sqrt squares back on 10^4 random PSD matrices") {
    Rng rng(11);
    double worst = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
      const int dim = 1 + static_cast<int>(rng.uniform() * 32.0);
      ComplexMatrix m = random_psd(dim, rng);
      m /= m.trace().real();
      const ComplexMatrix r = psd_sqrt(m);
      worst = std::max(worst, oracle::max_abs(r * r - m));
    }
    CHECK(worst <= 1e-8);
  }

  TEST_CASE("state validation") {
    ComplexVector v = ComplexVector::Zero(4);
    v(0) = 1.1;
    CHECK_THROWS_AS(PureState(2, v), DomainError);
    CHECK_THROWS_AS(PureState(2, ComplexVector::Zero(3)), DomainError);
    CHECK(PureState::normalized(2, v).amplitudes()(0).real() == doctest::Approx(1.0));
    CHECK_THROWS_AS(PureState::normalized(2, ComplexVector::Zero(4)), DomainError);

    CHECK_THROWS_AS(DensityMatrix(1, diag2(0.6, 0.6)), DomainError);
    CHECK_THROWS_AS(DensityMatrix(1, diag2(1.1, -0.1)), DomainError);
    ComplexMatrix nonherm = diag2(0.5, 0.5);
    nonherm(0, 1) = 0.1;
    CHECK_THROWS_AS(DensityMatrix(1, nonherm), DomainError);

    CHECK_THROWS_AS(QubitCut(2, {}), DomainError);
    CHECK_THROWS_AS(QubitCut(2, {0, 1}), DomainError);
    CHECK_THROWS_AS(QubitCut(2, {2}), DomainError);
    const QubitCut cut(3, {2, 0});
    CHECK(cut.side_a() == std::vector<int>{0, 2});
    CHECK(cut.side_b() == std::vector<int>{1});
    CHECK(cut.is_qubit_cut());
    CHECK_FALSE(QubitCut(4, {0, 1}).is_qubit_cut());
  }

  TEST_CASE("haar_random_pure") {
    const PureState a = haar_random_pure(3, 99);
    const PureState b = haar_random_pure(3, 99);
    CHECK(oracle::max_abs(a.amplitudes() - b.amplitudes()) == 0.0);
    CHECK(oracle::max_abs(a.amplitudes() - haar_random_pure(3, 100).amplitudes()) > 0.0);
    CHECK_THROWS_AS(haar_random_pure(0, 1), DomainError);
    CHECK_THROWS_AS(haar_random_pure(7, 1), DomainError);

    // E[tr rho_A^2] = (dA + dB)/(dA dB + 1) = 2/3 for one qubit against two.
    double mean = 0.0;
    const std::vector<int> keep{0};
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) {
      const PureState psi = haar_random_pure(3, derive_seed(5, static_cast<std::uint64_t>(i)));
      CHECK(std::abs(psi.amplitudes().norm() - 1.0) <= 1e-10);
      mean += partial_trace(psi, keep).purity();
    }
    mean /= samples;
    CHECK(mean == doctest::Approx(2.0 / 3.0).epsilon(0.01 / (2.0 / 3.0)));
  }

  TEST_CASE("random_mixed") {
    CHECK(random_mixed(2, 1, 3).purity() == doctest::Approx(1.0).epsilon(1e-9));
    const RealVector vals = herm_eigenvalues(random_mixed(2, 4, 3).matrix());
    int above = 0;
    for (int i = 0; i < vals.size(); ++i) above += vals(i) > 1e-9 ? 1 : 0;
    CHECK(above <= 4);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const RealVector v = herm_eigenvalues(random_mixed(2, 3, seed).matrix());
      CHECK(v(3) <= 1e-9);
      CHECK(v(2) > 1e-9);
    }
    CHECK(oracle::max_abs(random_mixed(2, 2, 8).matrix() - random_mixed(2, 2, 8).matrix()) == 0.0);
    CHECK_THROWS_AS(random_mixed(2, 0, 1), DomainError);
    CHECK_THROWS_AS(random_mixed(2, 5, 1), DomainError);
  }

  TEST_CASE("haar_random_unitary is unitary") {
    Rng rng(4);
    for (int dim = 1; dim <= 16; ++dim) {
      const ComplexMatrix u = haar_random_unitary(dim, rng);
      CHECK(oracle::max_abs(u.adjoint() * u - ComplexMatrix::Identity(dim, dim)) < 1e-12);
    }
  }

  TEST_CASE("purify") {
    const std::vector<int> sys{0};
    const PureState bellish = purify(DensityMatrix::maximally_mixed(1));
    CHECK(bellish.n_qubits() == 2);
    CHECK(oracle::max_abs(partial_trace(bellish, sys).matrix() - 0.5 * pauli::identity()) < 1e-12);
    CHECK(partial_trace(bellish, std::vector<int>{1}).purity() == doctest::Approx(0.5));

    const PureState spectral = purify(DensityMatrix(1, diag2(2.0 / 3.0, 1.0 / 3.0)));
    // Schmidt coefficients sqrt(2/3), sqrt(1/3): the ancilla marginal matches too.
    const RealVector anc = herm_eigenvalues(partial_trace(spectral, std::vector<int>{1}).matrix());
    CHECK(anc(0) == doctest::Approx(2.0 / 3.0));
    CHECK(anc(1) == doctest::Approx(1.0 / 3.0));
    CHECK(std::norm(spectral.amplitudes()(0)) == doctest::Approx(2.0 / 3.0));
    CHECK(std::norm(spectral.amplitudes()(3)) == doctest::Approx(1.0 / 3.0));

    // Pure input: the ancilla marginal is pure, so the output is a product.
    const PureState prod = purify(DensityMatrix::from_pure(haar_random_pure(2, 1)));
    CHECK(partial_trace(prod, std::vector<int>{2, 3}).purity() == doctest::Approx(1.0).epsilon(1e-9));

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const int n = 1 + static_cast<int>(seed % 3);
      const DensityMatrix rho = random_mixed(n, 1 + static_cast<int>(seed % (1 << n)), seed);
      std::vector<int> keep;
      for (int i = 0; i < n; ++i) keep.push_back(i);
      CHECK(oracle::max_abs(partial_trace(purify(rho), keep).matrix() - rho.matrix()) <= 1e-9);
    }
  }

  TEST_CASE("named states") {
    CHECK(states::ghz(3).amplitudes()(0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(states::ghz(3).amplitudes()(7).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(states::w(3).amplitudes()(4).real() == doctest::Approx(1.0 / std::sqrt(3.0)));
    CHECK(states::werner(0.8).matrix()(0, 3).real() == doctest::Approx(0.4));
    CHECK_THROWS_AS(states::werner(1.2), DomainError);
  }
}
