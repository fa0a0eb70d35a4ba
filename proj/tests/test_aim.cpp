#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mrbound/aim.hpp"

using namespace mrbound;

namespace {

const PhysicalConstants kAtomic = PhysicalConstants::atomic();

CoefficientPair ho_pair() {
  // y'' = 2x y' + (1 - eps) y, spectrum eps = 2n + 1
  CoefficientPair p;
  p.lambda = SymbolicRational(Poly2::from_x({0.0, 2.0}), Poly2::constant(1.0));
  p.s = SymbolicRational(Poly2::eps_linear(1.0, -1.0), Poly2::constant(1.0));
  p.k = 0;
  return p;
}

}  // namespace

TEST_CASE("polynomial layer basics") {
  const Poly p{1.0, 0.0, 3.0};  // 1 + 3x^2
  CHECK(p.eval(2.0) == doctest::Approx(13.0));
  CHECK(p.derivative().eval(2.0) == doctest::Approx(12.0));
  const Poly q = p * p;
  CHECK(q.eval(-1.0) == doctest::Approx(16.0));
  const Poly2 e = Poly2::eps_linear(1.0, -1.0);
  CHECK(e.eval(5.0, 0.25) == doctest::Approx(0.75));
  const SymbolicRational r(Poly2::from_x({0.0, 1.0}), Poly2::from_x({1.0, 1.0}));
  // (x/(1+x))' = 1/(1+x)^2
  CHECK(r.dx().eval(1.0, 0.0) == doctest::Approx(0.25));
  CHECK_THROWS_AS(r.eval(-1.0, 0.0), std::domain_error);
}

TEST_CASE("one iteration, constant pair") {
  CoefficientPair p;
  p.lambda = SymbolicRational(Poly2::constant(3.0), Poly2::constant(1.0));
  p.s = SymbolicRational(Poly2{}, Poly2::constant(1.0));
  const CoefficientPair p1 = iterate(p);
  CHECK(p1.k == 1);
  CHECK(p1.lambda.eval(0.7, 0.0) == doctest::Approx(9.0));  // c^2
  CHECK(p1.s.eval(0.7, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("one iteration, oscillator pair") {
  const CoefficientPair p1 = iterate(ho_pair());
  for (double x : {0.0, 0.5, -1.3}) {
    for (double eps : {0.0, 1.0, 2.5}) {
      CHECK(p1.lambda.eval(x, eps) ==
            doctest::Approx(2.0 + (1.0 - eps) + 4.0 * x * x).epsilon(1e-14));
      CHECK(p1.s.eval(x, eps) == doctest::Approx(2.0 * x * (1.0 - eps)).epsilon(1e-14));
    }
  }
}

TEST_CASE("recurrence agrees with hand-derived levels for the reduced pair") {
  // lambda0 = (2b-1)/(1+z) - (2g+1)/z, s0 = -F0/(z(1+z))
  const double g = -2.3, b = -1.1, la = -1.8125;
  const double d = g - b, F0 = la + d * d + d;
  const CoefficientPair p0 = pair_from_gamma_beta(g, b, la);
  auto l0 = [&](double z) { return (2.0 * b - 1.0) / (1.0 + z) - (2.0 * g + 1.0) / z; };
  auto l0p = [&](double z) {
    return -(2.0 * b - 1.0) / ((1.0 + z) * (1.0 + z)) + (2.0 * g + 1.0) / (z * z);
  };
  auto s0 = [&](double z) { return -F0 / (z * (1.0 + z)); };
  auto s0p = [&](double z) {
    return F0 * (1.0 + 2.0 * z) / (z * z * (1.0 + z) * (1.0 + z));
  };
  for (double z : {-2.0, -1.7, -3.5}) {
    CHECK(p0.lambda.eval(z, 0.0) == doctest::Approx(l0(z)).epsilon(1e-13));
    CHECK(p0.s.eval(z, 0.0) == doctest::Approx(s0(z)).epsilon(1e-13));
  }
  const CoefficientPair p1 = iterate(p0);
  const CoefficientPair p2 = iterate(p1, p0);
  CHECK(p2.k == 2);
  for (double z : {-2.0, -1.7, -3.5}) {
    const double l1 = l0p(z) + s0(z) + l0(z) * l0(z);
    const double s1 = s0p(z) + s0(z) * l0(z);
    CHECK(p1.lambda.eval(z, 0.0) == doctest::Approx(l1).epsilon(1e-12));
    CHECK(p1.s.eval(z, 0.0) == doctest::Approx(s1).epsilon(1e-12));
    // level 2 via central differences of level 1 (independent path); the
    // step trades truncation against rounding amplified by 1/(2h)
    const double h = 1e-5;
    const double l1p = (p1.lambda.eval(z + h, 0.0) - p1.lambda.eval(z - h, 0.0)) /
                       (2.0 * h);
    const double s1p = (p1.s.eval(z + h, 0.0) - p1.s.eval(z - h, 0.0)) / (2.0 * h);
    CHECK(p2.lambda.eval(z, 0.0) ==
          doctest::Approx(l1p + s1 + l0(z) * l1).epsilon(1e-5));
    CHECK(p2.s.eval(z, 0.0) == doctest::Approx(s1p + s0(z) * l1).epsilon(1e-5));
  }
}

TEST_CASE("quantization determinant point values") {
  SUBCASE("zero s-chain gives an identically zero determinant") {
    CoefficientPair p;
    p.lambda = SymbolicRational(Poly2::constant(3.0), Poly2::constant(1.0));
    p.s = SymbolicRational(Poly2{}, Poly2::constant(1.0));
    const CoefficientPair p1 = iterate(p);
    CHECK(quantization_delta(p1, p, 0.3, 1.7) == doctest::Approx(0.0));
  }
  SUBCASE("oscillator delta_1 = (3 - eps)(1 - eps) at the origin") {
    const CoefficientPair p0 = ho_pair();
    const CoefficientPair p1 = iterate(p0);
    CHECK(quantization_delta(p1, p0, 0.0, 1.0) == doctest::Approx(0.0));
    CHECK(quantization_delta(p1, p0, 0.0, 2.0) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(quantization_delta(p1, p1, 0.0, 1.0), std::invalid_argument);
  }
}

TEST_CASE("oscillator spectrum from the determinant roots") {
  AimConfig cfg;
  cfg.max_k = 9;
  cfg.x0 = 0.0;
  cfg.tol = 1e-10;
  cfg.bracket_lo = 0.0;
  cfg.bracket_hi = 12.0;
  const std::vector<AimRoot> roots = solve_eigenvalues(ho_pair(), cfg);
  REQUIRE(roots.size() >= 6);
  for (int i = 0; i < 6; ++i) {
    CHECK(roots[i].eps == doctest::Approx(2.0 * i + 1.0).epsilon(1e-9));
    CHECK(roots[i].k_used <= 9);
  }
}

TEST_CASE("zero determinant is flagged, not returned as roots") {
  CoefficientPair p;
  p.lambda = SymbolicRational(Poly2::from_x({0.0, 2.0}), Poly2::constant(1.0));
  p.s = SymbolicRational(Poly2{}, Poly2::constant(1.0));
  AimConfig cfg;
  cfg.max_k = 4;
  cfg.bracket_lo = 0.0;
  cfg.bracket_hi = 4.0;
  CHECK_THROWS_AS(solve_eigenvalues(p, cfg), AimDegenerateError);
}

TEST_CASE("reduced-problem roots equal the closed forms") {
  struct Case {
    int n, ell;
    double inv_b;
  };
  const Case cases[] = {{0, 1, 0.025}, {1, 1, 0.05}, {0, 2, 0.075}, {1, 3, 0.05},
                        {0, 4, 0.025}};
  for (const auto scheme : {CentrifugalScheme::Approx1, CentrifugalScheme::Approx2,
                            CentrifugalScheme::Approx3}) {
    for (const auto& c : cases) {
      const double b = 1.0 / c.inv_b;
      const PotentialParams params{2.0 * b, 0.75, b};
      const double target =
          energy_manning_rosen({c.n, c.ell}, params, scheme, kAtomic).value;
      const ParametricPair pp = mr_to_aim(params, c.ell, scheme, kAtomic);
      AimConfig cfg;
      cfg.max_k = c.n + 5;
      cfg.x0 = pp.default_x0;
      cfg.tol = 1e-12;
      cfg.bracket_lo = 1.3 * target;
      cfg.bracket_hi = 0.7 * target;
      const std::vector<AimRoot> roots = solve_eigenvalues(pp, cfg);
      REQUIRE(!roots.empty());
      double best = roots[0].eps;
      for (const auto& r : roots)
        if (std::abs(r.eps - target) < std::abs(best - target)) best = r.eps;
      CHECK(best == doctest::Approx(target).epsilon(1e-7));
      CHECK(std::abs(best - target) < 1e-8);
    }
  }
}

TEST_CASE("stabilized root does not depend on the evaluation point") {
  const double b = 40.0;
  const PotentialParams params{80.0, 0.75, b};
  const double target = energy_manning_rosen({0, 1}, params,
                                             CentrifugalScheme::Approx1, kAtomic)
                            .value;
  const ParametricPair pp = mr_to_aim(params, 1, CentrifugalScheme::Approx1, kAtomic);
  double found[3];
  const double points[3] = {-1.7, -2.0, -3.0};
  for (int i = 0; i < 3; ++i) {
    AimConfig cfg;
    cfg.max_k = 5;
    cfg.x0 = points[i];
    cfg.tol = 1e-12;
    cfg.bracket_lo = 1.2 * target;
    cfg.bracket_hi = 0.8 * target;
    const auto roots = solve_eigenvalues(pp, cfg);
    REQUIRE(!roots.empty());
    found[i] = roots[0].eps;
  }
  CHECK(std::abs(found[0] - found[1]) < 1e-11);
  CHECK(std::abs(found[2] - found[1]) < 1e-11);
}

TEST_CASE("root-sequence pattern of the quotient condition") {
  // gamma_k - beta_k = -(2k+1)/2 - sqrt(1 - 4 la)/2 makes delta_{k+1} vanish
  const double la = -1.8125, beta = -3.0;
  const double root = std::sqrt(1.0 - 4.0 * la);
  const double x0 = -2.0;
  for (int k = 0; k <= 2; ++k) {
    const double gamma = beta - (2.0 * k + 1.0) / 2.0 - root / 2.0;
    const CoefficientPair p = pair_from_gamma_beta(gamma, beta, la);
    // detuned gamma shows the zero is not generic
    const CoefficientPair q = pair_from_gamma_beta(gamma - 0.37, beta, la);
    const double dk = quantization_delta_scaled(p, k + 1, x0, 0.0);
    const double dk_off = quantization_delta_scaled(q, k + 1, x0, 0.0);
    CHECK(std::abs(dk) < 1e-8 * std::abs(dk_off));
    if (k == 0) {
      // one symbolic level is still exact; it must agree in its zero
      const CoefficientPair p1 = iterate(p);
      CHECK(std::abs(quantization_delta(p1, p, x0, 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("canonical solvable shape is recognized") {
  SUBCASE("reduced pair matches with the expected parameters") {
    const double b = 40.0;
    const PotentialParams params{80.0, 0.75, b};
    const ParametricPair pp =
        mr_to_aim(params, 1, CentrifugalScheme::Approx1, kAtomic);
    const double E =
        energy_manning_rosen({0, 1}, params, CentrifugalScheme::Approx1, kAtomic)
            .value;
    const CoefficientPair p0 = pp.build(E);
    SolvableForm sf;
    REQUIRE(match_solvable_form(p0, 0.0, sf));
    // gamma, beta here are the decaying (negative) branches
    const double et = eps_tilde(E, b, kAtomic);
    const double gamma = -std::sqrt(scheme_T(CentrifugalScheme::Approx1, 1, params) - et);
    const double beta = -std::sqrt(scheme_C(CentrifugalScheme::Approx1, 1) - et);
    CHECK(sf.a == doctest::Approx(beta - 0.5).epsilon(1e-10));
    CHECK(sf.b_coef == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(sf.N == doctest::Approx(-1.0));
    CHECK(sf.m == doctest::Approx(gamma - 0.5).epsilon(1e-10));
    CHECK(sf.sigma == doctest::Approx(2.0 * gamma + 1.0).epsilon(1e-10));
    CHECK(sf.rho == doctest::Approx(2.0 * (gamma - beta) + 1.0).epsilon(1e-10));
    // definitional identities
    CHECK(sf.sigma ==
          doctest::Approx((2.0 * sf.m + sf.N + 3.0) / (sf.N + 2.0)).epsilon(1e-14));
    CHECK(sf.rho == doctest::Approx(((2.0 * sf.m + 1.0) * sf.b_coef + 2.0 * sf.a) /
                                    ((sf.N + 2.0) * sf.b_coef))
                        .epsilon(1e-14));
  }
  SUBCASE("wrong structure is a clean no-match") {
    const CoefficientPair p = ho_pair();
    SolvableForm sf;
    CHECK_FALSE(match_solvable_form(p, 1.0, sf));
  }
}
