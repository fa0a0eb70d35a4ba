#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "mrbound/potentials.hpp"

using namespace mrbound;

namespace {
const PhysicalConstants kAtomic = PhysicalConstants::atomic();
}

TEST_CASE("potential vanishes when both couplings vanish") {
  PotentialParams p{0.0, 0.0, 3.0};
  CHECK(manning_rosen_value(1.0, p, kAtomic) == 0.0);
  p.alpha = 1.0;  // alpha(alpha-1) = 0
  CHECK(manning_rosen_value(2.5, p, kAtomic) == 0.0);
}

TEST_CASE("potential value at u = 1/2") {
  // r = b ln 2 makes u = 1/2, both ratios equal 1
  const PotentialParams p{80.0, 0.75, 40.0};
  const double r = 40.0 * std::log(2.0);
  CHECK(manning_rosen_value(r, p, kAtomic) ==
        doctest::Approx(-0.02505859375).epsilon(1e-12));
}

TEST_CASE("potential rejects non-positive r") {
  const PotentialParams p{80.0, 0.75, 40.0};
  CHECK_THROWS_AS(manning_rosen_value(0.0, p, kAtomic), std::domain_error);
  CHECK_THROWS_AS(manning_rosen_value(-1.0, p, kAtomic), std::domain_error);
}

TEST_CASE("screened-Coulomb form") {
  const double V0 = 3.0, delta = 0.5;
  CHECK(hulthen_value(std::log(2.0) / delta, V0, delta) ==
        doctest::Approx(-V0).epsilon(1e-14));
  CHECK(hulthen_value(1e3, V0, delta) == doctest::Approx(0.0).epsilon(1e-200));
  CHECK_THROWS_AS(hulthen_value(-1.0, V0, delta), std::domain_error);
  CHECK_THROWS_AS(hulthen_value(1.0, V0, -0.1), std::domain_error);
}

TEST_CASE("screened-Coulomb form is the alpha = 1 special case") {
  const double A = 7.0, b = 5.0;
  const PotentialParams p{A, 1.0, b};
  const double V0 = A / (2.0 * b * b);  // A hbar^2/(2 mu b^2), atomic units
  for (double r : {0.1, 0.5, 1.0, 3.0, 10.0, 40.0}) {
    CHECK(hulthen_value(r, V0, 1.0 / b) ==
          doctest::Approx(manning_rosen_value(r, p, kAtomic)).epsilon(1e-13));
  }
  const PotentialParams p0{A, 0.0, b};
  for (double r : {0.1, 1.0, 10.0})
    CHECK(manning_rosen_value(r, p0, kAtomic) ==
          doctest::Approx(manning_rosen_value(r, p, kAtomic)).epsilon(1e-13));
}

TEST_CASE("centrifugal surrogate limits and point values") {
  const double b = 7.0;
  CHECK(centrifugal_term(1e4 * b, b, CentrifugalScheme::Approx3) ==
        doctest::Approx(0.0).epsilon(1e-100));
  CHECK(centrifugal_term(1e4 * b, b, CentrifugalScheme::Approx1) ==
        doctest::Approx(1.0 / (12.0 * b * b)).epsilon(1e-12));
  CHECK(centrifugal_term(b * std::log(2.0), b, CentrifugalScheme::Approx3) ==
        doctest::Approx(2.0 / (b * b)).epsilon(1e-13));
  CHECK(centrifugal_term(3.0, b, CentrifugalScheme::Exact) ==
        doctest::Approx(1.0 / 9.0).epsilon(1e-14));
}

TEST_CASE("scheme 1 minus scheme 3 is the constant 1/(12 b^2)") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> rb(0.5, 50.0), rr(0.01, 200.0);
  for (int i = 0; i < 200; ++i) {
    const double b = rb(rng), r = rr(rng);
    const double d = centrifugal_term(r, b, CentrifugalScheme::Approx1) -
                     centrifugal_term(r, b, CentrifugalScheme::Approx3);
    CHECK(d == doctest::Approx(1.0 / (12.0 * b * b)).epsilon(1e-10));
  }
}

TEST_CASE("surrogates approach the exact term for r << b") {
  for (double b : {100.0, 1000.0}) {
    for (double rob : {0.001, 0.005, 0.01}) {
      const double r = rob * b;
      const double exact = centrifugal_term(r, b, CentrifugalScheme::Exact);
      const double a1 = centrifugal_term(r, b, CentrifugalScheme::Approx1);
      CHECK(std::abs(a1 - exact) / exact < 1e-3);
    }
  }
}

TEST_CASE("effective potential assembly") {
  const PotentialParams p{80.0, 0.75, 40.0};
  SUBCASE("l = 0 is the bare potential") {
    for (double r : {0.5, 2.0, 30.0})
      CHECK(effective_potential(r, p, 0, CentrifugalScheme::Approx2, kAtomic) ==
            manning_rosen_value(r, p, kAtomic));
  }
  SUBCASE("pure centrifugal barrier") {
    const PotentialParams free_p{0.0, 0.0, 40.0};
    const double r = 3.0;
    CHECK(effective_potential(r, free_p, 1, CentrifugalScheme::Exact, kAtomic) ==
          doctest::Approx(1.0 / (r * r)).epsilon(1e-14));
  }
  SUBCASE("scheme difference is r-independent") {
    const double shift = 2.0 / (2.0 * 12.0 * p.b * p.b);  // l(l+1) hbar^2/(24 mu b^2)
    for (double r : {0.2, 1.0, 10.0, 100.0}) {
      const double d =
          effective_potential(r, p, 1, CentrifugalScheme::Approx1, kAtomic) -
          effective_potential(r, p, 1, CentrifugalScheme::Approx3, kAtomic);
      CHECK(d == doctest::Approx(shift).epsilon(1e-10));
    }
  }
}

TEST_CASE("potential depends on alpha only through alpha(alpha-1)") {
  std::mt19937 rng(777);
  std::uniform_real_distribution<double> ra(0.1, 3.0), rr(0.05, 100.0);
  for (int i = 0; i < 100; ++i) {
    const double alpha = ra(rng), r = rr(rng);
    const PotentialParams p1{25.0, alpha, 10.0};
    const PotentialParams p2{25.0, 1.0 - alpha, 10.0};
    CHECK(manning_rosen_value(r, p1, kAtomic) ==
          doctest::Approx(manning_rosen_value(r, p2, kAtomic)).epsilon(1e-13));
  }
}

TEST_CASE("constants resolve the energy prefactor") {
  CHECK(kAtomic.prefactor(40.0) == doctest::Approx(1.0 / 3200.0).epsilon(1e-15));
  const PhysicalConstants mol = PhysicalConstants::molecular(0.929931, 93115.0);
  CHECK(mol.prefactor(40.0) ==
        doctest::Approx(1973.29 * 1973.29 /
                        (2.0 * 0.929931 * 93115.0 * 1600.0)).epsilon(1e-14));
  CHECK(kAtomic.kinetic_factor(5.0) ==
        doctest::Approx(1.0 / (kAtomic.prefactor(5.0) * 25.0)).epsilon(1e-15));
  CHECK_THROWS_AS(PhysicalConstants::molecular(-1.0, 93115.0).prefactor(1.0),
                  std::domain_error);
  CHECK_THROWS_AS((PotentialParams{1.0, 1.0, -2.0}).validate(), std::domain_error);
}
