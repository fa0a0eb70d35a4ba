#pragma once

#include "mrbound/closedform.hpp"

namespace mrbound {

// Rising factorial sigma (sigma+1) ... (sigma+n-1); empty product is 1.
double pochhammer(double sigma, int n);

// Terminating Gauss hypergeometric sum
//   sum_{j=0}^{n} (-n)_j (bparam)_j / ((c)_j j!) z^j
// c must not be a non-positive integer in -(n-1)..0.
double gauss_2f1_terminating(int n, double bparam, double c, double z);

// Radial eigenfunction evaluator. The published z-space product form is
// complex-valued on the physical domain (z < -1), so evaluation uses the
// equivalent real profile in u = exp(-r/b) in (0, 1):
//   R(r) = norm * u^s (1-u)^t F(-n, n + 2(s+t); 2s+1; u)
// with s = beta = sqrt(C - eps~) (outer decay exponent) and
// t = gamma - beta - n = (1 + sqrt(1 + 4 alpha(alpha-1) + 4 l(l+1)))/2
// (inner decay exponent). gamma = sqrt(T - eps~) exceeds beta for every
// bound state here (gamma^2 - beta^2 is the positive coupling constant).
class RadialWavefunction {
 public:
  RadialWavefunction(QuantumNumbers qn, double gamma, double beta, double t,
                     double b);

  double operator()(double r) const;  // includes norm once set

  double gamma() const { return gamma_; }
  double beta() const { return beta_; }
  double inner_exponent() const { return t_; }
  int n() const { return n_; }
  double b() const { return b_; }
  double norm() const { return norm_; }
  void set_norm(double v);

 private:
  int n_;
  int ell_;
  double gamma_, beta_, t_, b_;
  double norm_ = 1.0;
};

// Build the eigenfunction for a bound state of the approximated problem.
// Throws if the closed-form energy is not bound.
RadialWavefunction radial_wavefunction(QuantumNumbers qn,
                                       const PotentialParams& params,
                                       CentrifugalScheme scheme,
                                       const PhysicalConstants& consts);

// Set norm so that the square integral over (0, r_max] is 1. Composite
// Gauss-Legendre quadrature on log-spaced panels; panels * points_per_panel
// nodes total.
RadialWavefunction normalize(RadialWavefunction wf, double r_max,
                             int panels = 64, int points_per_panel = 16);

// Square integral with the same quadrature (self-check helper).
double square_integral(const RadialWavefunction& wf, double r_max,
                       int panels = 64, int points_per_panel = 16);

// Overlap integral of two evaluators over (0, r_max].
double overlap_integral(const RadialWavefunction& a, const RadialWavefunction& b,
                        double r_max, int panels = 64, int points_per_panel = 16);

// Sign changes of R on a log-spaced grid over (r_lo, r_hi).
int count_nodes(const RadialWavefunction& wf, double r_lo, double r_hi,
                int samples = 4000);

// Default outer radius for integrals, b * max(40, 20(n + l + 1)).
double default_r_max(QuantumNumbers qn, double b);

}  // namespace mrbound
