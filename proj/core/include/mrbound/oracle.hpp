#pragma once

#include <functional>
#include <utility>

#include "mrbound/closedform.hpp"

namespace mrbound {

struct RadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int count = 8000;  // >= 100

  double h() const { return (r_max - r_min) / (count - 1); }
  void validate() const {
    if (!(r_min > 0.0) || !(r_max > r_min) || count < 100)
      throw std::invalid_argument("RadialGrid: need 0 < r_min < r_max, count >= 100");
  }
  // r_min = 1e-6 b, r_max = b max(40, 20(n+l+1))
  static RadialGrid defaults(QuantumNumbers qn, double b, int count = 8000);
};

struct ShootingResult {
  double energy = 0.0;
  int nodes = 0;
  double mismatch = 0.0;
  int iterations = 0;
};

// Radial problem handed to the integrator. The small-r expansion
//   f(r) = s2/r^2 + a(-1)/r + a(0) + a(1) r + a(2) r^2 + a(3) r^3
// of f = (2 mu/hbar^2)(V_eff - E) lets the outward sweep start past the
// unresolved singular core with a series solution carrying the true
// regular exponent (which differs from l+1 whenever alpha(alpha-1) != 0).
struct OracleProblem {
  std::function<double(double)> veff;
  double kinetic = 2.0;  // 2 mu / hbar^2
  int ell = 0;
  bool has_series = false;
  double s2 = 0.0;                      // 1/r^2 strength of f
  double a_coeff[5] = {0, 0, 0, 0, 0};  // powers r^-1 .. r^3, E-free part
};

// Assemble the problem for the exponential potential with the chosen
// centrifugal scheme (Exact included), series hints filled in.
OracleProblem make_problem(const PotentialParams& params, int ell,
                           CentrifugalScheme scheme, const PhysicalConstants& consts);

// Two-sided Numerov sweep at trial energy E: outward from the series (or
// r^{l+1}) seed, inward from a decaying tail (or a hard wall when E lies
// above the outer potential), matched at the outermost classical turning
// point. Returns (interior node count, matching defect).
std::pair<int, double> numerov_sweep(const OracleProblem& prob, double E,
                                     const RadialGrid& grid);

// Bisection on node count then defect sign, refined to tol.
ShootingResult shoot_eigenvalue(const OracleProblem& prob, QuantumNumbers qn,
                                double bracket_lo, double bracket_hi, double tol,
                                const RadialGrid& grid);

}  // namespace mrbound
