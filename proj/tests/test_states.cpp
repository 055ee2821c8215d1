#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "qbcap/states.hpp"
#include "test_support.hpp"

using namespace qbcap;
using test::Rng;

TEST_CASE("ghz state") {
  const DensityMatrix rho = ghz_state();
  CHECK(rho.matrix()(0, 0) == Complex(0.5));
  CHECK(rho.matrix()(0, 7) == Complex(0.5));
  CHECK(rho.matrix()(7, 0) == Complex(0.5));
  CHECK(rho.matrix()(7, 7) == Complex(0.5));
  CHECK(std::abs(rho.matrix().trace() - Complex(1.0)) == 0.0);

  const Spectrum s = hermitian_eigenvalues_ascending(rho.matrix());
  for (int i = 0; i < 7; ++i) CHECK(std::abs(s.values[i]) <= 1e-14);
  CHECK(std::abs(s.values[7] - 1.0) <= 1e-14);
}

TEST_CASE("ghz-like states") {
  SUBCASE("a = 1/sqrt(2) recovers ghz") {
    const DensityMatrix rho = ghz_like_state(1.0 / std::sqrt(2.0));
    CHECK(max_abs_diff(rho.matrix(), ghz_state().matrix()) <= 1e-15);
  }

  SUBCASE("a = 0 is the top basis projector") {
    const DensityMatrix rho = ghz_like_state(0.0);
    CHECK(rho.matrix()(7, 7) == Complex(1.0));
    CHECK(rho.matrix()(0, 0) == Complex(0.0));
    CHECK(rho.matrix()(0, 7) == Complex(0.0));
  }

  SUBCASE("a = 0.5 corner weights") {
    const DensityMatrix rho = ghz_like_state(0.5);
    CHECK(std::abs(rho.matrix()(0, 0).real() - 0.25) <= 1e-15);
    CHECK(std::abs(rho.matrix()(7, 7).real() - 0.75) <= 1e-15);
  }

  SUBCASE("amplitude out of range is rejected") {
    CHECK_THROWS_AS(ghz_like_state(1.5), std::invalid_argument);
    CHECK_THROWS_AS(ghz_like_state(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(StateSpec::ghz_like(2.0), std::invalid_argument);
  }

  SUBCASE("coefficient identities") {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      const StateSpec spec = StateSpec::ghz_like(test::uniform(rng));
      CHECK(std::abs(spec.c1() + spec.c3() - 1.0) <= 1e-15);
      CHECK(std::abs(spec.c2() * spec.c2() - spec.c1() * spec.c3()) <= 1e-15);
    }
  }

  SUBCASE("pure projector: rho^2 = rho and a single unit eigenvalue") {
    Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
      const DensityMatrix rho = ghz_like_state(test::uniform(rng));
      CHECK(max_abs_diff(rho.matrix() * rho.matrix(), rho.matrix()) <= 1e-12);
      const Spectrum s = hermitian_eigenvalues_ascending(rho.matrix());
      for (int i = 0; i < 7; ++i) CHECK(std::abs(s.values[i]) <= 1e-12);
      CHECK(std::abs(s.values[7] - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("tripartite level structure") {
  SUBCASE("default splittings") {
    const TripartiteHamiltonian h = tripartite_hamiltonian(0.5, 0.3, 0.1);
    CHECK(h.ordered);
    const std::vector<double> expected{-0.9, -0.7, -0.3, -0.1, 0.1, 0.3, 0.7, 0.9};
    REQUIRE(h.op.levels().values.size() == 8);
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(std::abs(h.op.levels().values[i] - expected[i]) <= 1e-15);
  }

  SUBCASE("all-zero splittings") {
    const TripartiteHamiltonian h = tripartite_hamiltonian(0.0, 0.0, 0.0);
    for (double v : h.op.levels().values) CHECK(v == 0.0);
  }

  SUBCASE("degenerate splittings, against sign-pattern enumeration") {
    const TripartiteHamiltonian h = tripartite_hamiltonian(1.0, 1.0, 0.0);
    std::vector<double> enumerated;
    for (double sa : {1.0, -1.0})
      for (double sb : {1.0, -1.0})
        for (double sc : {1.0, -1.0}) enumerated.push_back(sa * 1.0 + sb * 1.0 + sc * 0.0);
    std::sort(enumerated.begin(), enumerated.end());
    for (std::size_t i = 0; i < 8; ++i) CHECK(h.op.levels().values[i] == enumerated[i]);
    const std::vector<double> expected{-2.0, -2.0, 0.0, 0.0, 0.0, 0.0, 2.0, 2.0};
    for (std::size_t i = 0; i < 8; ++i) CHECK(h.op.levels().values[i] == expected[i]);
  }

  SUBCASE("ordering violations only raise the flag") {
    const TripartiteHamiltonian h = tripartite_hamiltonian(0.1, 0.3, 0.5);
    CHECK_FALSE(h.ordered);
    CHECK(h.op.levels().values.front() == -0.9);
  }

  SUBCASE("operator is real diagonal; sorted diagonal equals levels exactly") {
    Rng rng(23);
    for (int trial = 0; trial < 50; ++trial) {
      const TripartiteHamiltonian h = tripartite_hamiltonian(
          test::uniform(rng), test::uniform(rng), test::uniform(rng));
      const ComplexMatrix m = h.op.matrix();
      for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
          CHECK(m(i, j).imag() == 0.0);
          if (i != j) CHECK(m(i, j) == Complex(0.0));
        }
      std::vector<double> diag = h.op.diagonal();
      std::sort(diag.begin(), diag.end());
      CHECK(diag == h.op.levels().values);
    }
  }
}

TEST_CASE("single-qubit operator") {
  const Hamiltonian h = single_qubit_hamiltonian(0.5);
  CHECK(h.diagonal() == std::vector<double>{0.5, -0.5});
  CHECK(h.levels().values == std::vector<double>{-0.5, 0.5});
}
