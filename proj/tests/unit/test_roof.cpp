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
#include "tsq/concurrence.hpp"
#include "tsq/error.hpp"
#include "tsq/gq.hpp"
#include "tsq/roof.hpp"

using namespace tsq;

namespace {

double weighted_value(const RoofResult& r, const PureMeasure& m, const QubitCut& cut) {
  double acc = 0.0;
  for (std::size_t i = 0; i < r.best.states.size(); ++i) acc += r.best.weights[i] * m.on_pure(r.best.states[i], cut);
  return acc;
}

void check_decomposition(const Decomposition& d, const DensityMatrix& rho) {
  double total = 0.0;
  for (double w : d.weights) {
    CHECK(w >= 0.0);
    total += w;
  }
  CHECK(std::abs(total - 1.0) <= 1e-10);
  CHECK(oracle::max_abs(d.reconstruct() - rho.matrix()) <= 1e-8);
}

}  // namespace

TEST_SUITE("roof") {
  TEST_CASE("decomposition_from_unitary examples") {
    ComplexMatrix d = ComplexMatrix::Zero(2, 2);
    d(0, 0) = 2.0 / 3.0;
    d(1, 1) = 1.0 / 3.0;
    const DensityMatrix rho(1, d);
    const Decomposition spectral = decomposition_from_unitary(rho, ComplexMatrix::Identity(2, 2));
    REQUIRE(spectral.weights.size() == 2);
    CHECK(spectral.weights[0] == doctest::Approx(2.0 / 3.0));
    CHECK(spectral.weights[1] == doctest::Approx(1.0 / 3.0));
    CHECK(std::norm(spectral.states[0].amplitudes()(0)) == doctest::Approx(1.0));
    CHECK(std::norm(spectral.states[1].amplitudes()(1)) == doctest::Approx(1.0));

    ComplexMatrix h(2, 2);
    h << 1.0, 1.0, 1.0, -1.0;
    h /= std::sqrt(2.0);
    const Decomposition plus_minus = decomposition_from_unitary(DensityMatrix::maximally_mixed(1), h);
    CHECK(plus_minus.weights[0] == doctest::Approx(0.5));
    CHECK(plus_minus.weights[1] == doctest::Approx(0.5));
    for (const PureState& s : plus_minus.states) {
      CHECK(std::norm(s.amplitudes()(0)) == doctest::Approx(0.5));
      CHECK(std::norm(s.amplitudes()(1)) == doctest::Approx(0.5));
    }
    CHECK(std::abs(plus_minus.states[0].amplitudes().dot(plus_minus.states[1].amplitudes())) < 1e-12);

    // Padding with zero weights: m = 3 on a rank-2 state.
    const Decomposition padded = decomposition_from_unitary(rho, ComplexMatrix::Identity(3, 3));
    CHECK(padded.weights.size() == 3);
    CHECK(padded.weights[2] == doctest::Approx(0.0));

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const DensityMatrix r = random_mixed(2, 1 + static_cast<int>(seed % 4), seed);
      const int m = 4 + static_cast<int>(seed % 5);
      check_decomposition(decomposition_from_unitary(r, oracle::random_unitary(m, seed)), r);
    }

    ComplexMatrix not_unitary = ComplexMatrix::Identity(2, 2);
    not_unitary(0, 1) = 0.1;
    CHECK_THROWS_AS(decomposition_from_unitary(rho, not_unitary), DomainError);
    CHECK_THROWS_AS(decomposition_from_unitary(rho, ComplexMatrix::Identity(1, 1)), DomainError);
  }

  TEST_CASE("numerical rank") {
    CHECK(numerical_rank(DensityMatrix::from_pure(states::w(3))) == 1);
    CHECK(numerical_rank(DensityMatrix::maximally_mixed(2)) == 4);
    CHECK(numerical_rank(random_mixed(3, 3, 1)) == 3);
  }

  TEST_CASE("pure input is exact") {
    const DensityMatrix rho = DensityMatrix::from_pure(states::w(3));
    const QubitCut cut = QubitCut::single(3, 0);
    for (Direction dir : {Direction::minimize, Direction::maximize}) {
      const RoofResult r = roof_extremize(rho, cut, PureMeasure::tsallis(EntropicIndex(2.0)), dir, {}, 1);
      CHECK(r.value == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
      CHECK(r.best.states.size() == 1);
      CHECK(r.converged);
    }
  }

  TEST_CASE("two-qubit oracles") {
    const QubitCut cut = QubitCut::single(2, 0);
    const RoofBudget budget{4, 16, 500};
    const DensityMatrix rho = random_mixed(2, 2, 21);
    const RoofResult tmin = roof_extremize(rho, cut, PureMeasure::tsallis(EntropicIndex(2.0)), Direction::minimize,
                                           budget, 7);
    const double c = concurrence_2q(rho);
    CHECK(std::abs(tmin.value - c * c / 2.0) <= 1e-3);
    check_decomposition(tmin.best, rho);
    CHECK(std::abs(tmin.value - weighted_value(tmin, PureMeasure::tsallis(EntropicIndex(2.0)), cut)) <= 1e-10);

    ComplexMatrix g = ComplexMatrix::Zero(4, 4);
    g(0, 0) = 0.5;
    g(3, 3) = 0.5;
    const RoofResult cmax =
        roof_extremize(DensityMatrix(2, g), cut, PureMeasure::concurrence(), Direction::maximize, budget, 7);
    CHECK(std::abs(cmax.value - 1.0) <= 1e-3);
  }

  TEST_CASE("separable I/4 has zero roof") {
    const RoofResult r = roof_extremize(DensityMatrix::maximally_mixed(2), QubitCut::single(2, 0),
                                        PureMeasure::tsallis(EntropicIndex(2.0)), Direction::minimize, {}, 3);
    CHECK(r.value <= 1e-6);
  }

  TEST_CASE("sandwich bounds on random two-qubit states") {
    const QubitCut cut = QubitCut::single(2, 0);
    const RoofBudget budget{0, 4, 150};
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const DensityMatrix rho = random_mixed(2, 2 + static_cast<int>(seed % 3), seed);
      const double c = concurrence_2q(rho);
      const RoofResult tmin = roof_extremize(rho, cut, PureMeasure::tsallis(EntropicIndex(2.5)), Direction::minimize,
                                             budget, seed);
      CHECK(tmin.value >= g_q(c, EntropicIndex(2.5)) - 1e-6);
      const RoofResult cmax = roof_extremize(rho, cut, PureMeasure::concurrence(), Direction::maximize, budget, seed);
      CHECK(cmax.value <= coa_2q(rho) + 1e-6);
      CHECK(cmax.value >= c - 1e-6);
    }
  }

  TEST_CASE("seed determinism") {
    const DensityMatrix rho = random_mixed(2, 3, 5);
    const QubitCut cut = QubitCut::single(2, 0);
    const RoofBudget budget{0, 6, 200};
    const PureMeasure m = PureMeasure::von_neumann_entropy();
    const RoofResult a = roof_extremize(rho, cut, m, Direction::minimize, budget, 77);
    const RoofResult b = roof_extremize(rho, cut, m, Direction::minimize, budget, 77);
    CHECK(a.value == b.value);
    CHECK(a.restarts_used == 6);
    CHECK(oracle::max_abs(a.best.reconstruct() - b.best.reconstruct()) == 0.0);
  }

  TEST_CASE("budget validation") {
    const DensityMatrix rho = random_mixed(2, 2, 5);
    const QubitCut cut = QubitCut::single(2, 0);
    const PureMeasure m = PureMeasure::concurrence();
    CHECK_THROWS_AS(roof_extremize(rho, cut, m, Direction::maximize, {0, 0, 10}, 1), DomainError);
    CHECK_THROWS_AS(roof_extremize(rho, cut, m, Direction::maximize, {0, 3, 0}, 1), DomainError);
    CHECK_THROWS_AS(roof_extremize(rho, cut, m, Direction::maximize, {1, 3, 10}, 1), DomainError);
    CHECK_THROWS_AS(roof_extremize(rho, cut, m, Direction::maximize, {5, 3, 10}, 1), DomainError);
    CHECK_NOTHROW(roof_extremize(rho, cut, m, Direction::maximize, {4, 1, 10}, 1));
    CHECK_THROWS_AS(roof_extremize(rho, QubitCut::single(3, 0), m, Direction::maximize, {}, 1), DomainError);
  }

  TEST_CASE("measure names") {
    CHECK(PureMeasure::tsallis(EntropicIndex(2.0)).name() == "tsallis_q");
    CHECK(PureMeasure::von_neumann_entropy().name() == "von_neumann");
    CHECK(PureMeasure::concurrence().name() == "concurrence");
  }
}
