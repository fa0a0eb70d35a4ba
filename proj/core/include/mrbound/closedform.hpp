#pragma once

#include "mrbound/potentials.hpp"

namespace mrbound {

struct QuantumNumbers {
  int n = 0;    // radial quantum number, >= 0
  int ell = 0;  // orbital quantum number, >= 0

  void validate() const {
    if (n < 0 || ell < 0) throw std::domain_error("QuantumNumbers: n, ell must be >= 0");
  }
};

struct LambdaCoefficients {
  double lambda_a = 0.0;
  double lambda_b = 0.0;
  double lambda_c = 0.0;
};

struct EnergyResult {
  double value = 0.0;
  CentrifugalScheme scheme = CentrifugalScheme::Approx1;
  bool bound = false;  // value < 0
};

// zeta(l) = alpha(alpha-1) + A + l(l+1)(1 - e^{1/b})
double zeta(int ell, const PotentialParams& params);

// Dimensionless energy 2 mu E b^2 / hbar^2 for a given energy E.
double eps_tilde(double E, double b, const PhysicalConstants& consts);

// Solves the three linear relations tying (lambda_a, lambda_b, lambda_c) to
// (alpha, A, ell, E):
//   lambda_b - lambda_c - lambda_a = l(l+1)/12 - eps_tilde
//   lambda_b - lambda_a            = -alpha(alpha-1) - A
//   -lambda_a                      = alpha(alpha+1) + l(l+1)
// Note: the third relation is implemented as published. The dynamically
// consistent constant is -(alpha(alpha-1) + l(l+1)); the two conventions
// differ only in lambda_a, and gamma, beta below depend only on lambda_c
// and lambda_b - lambda_a - lambda_c, which agree. The iteration-engine
// reduction uses the dynamical constant (see aim.hpp).
LambdaCoefficients lambda_coefficients(const PotentialParams& params, int ell,
                                       double E, const PhysicalConstants& consts);

// Scheme constants for the factored eigenvalue expression.
// T is the constant term of the dimensionless energy, C is the s-exponent
// constant (gamma^2 = T - eps_tilde, beta^2 = C - eps_tilde).
double scheme_T(CentrifugalScheme scheme, int ell, const PotentialParams& params);
double scheme_C(CentrifugalScheme scheme, int ell);

// Closed-form bound-state energy for the chosen approximation scheme.
// Throws for Exact (no closed form; use the oracle module).
EnergyResult energy_manning_rosen(QuantumNumbers qn, const PotentialParams& params,
                                  CentrifugalScheme scheme,
                                  const PhysicalConstants& consts);

// l = 0 closed form (exact, no centrifugal approximation involved):
//   E = -(hbar^2/2 mu b^2) [ (A - alpha)/(2(alpha+n)) - n(n+2 alpha)/(2(alpha+n)) ]^2
double energy_swave(int n, const PotentialParams& params,
                    const PhysicalConstants& consts);

// Screened-Coulomb special case (alpha in {0,1}); equals energy_manning_rosen
// there for every scheme.
double energy_hulthen(QuantumNumbers qn, double A, double b, CentrifugalScheme scheme,
                      const PhysicalConstants& consts);

// l = 0 screened-Coulomb spectrum: E = -[A-(n+1)^2]^2/(n+1)^2 * hbar^2/(8 mu b^2)
double energy_hulthen_swave(int n, double A, double b, const PhysicalConstants& consts);

// Spectroscopic label helpers: "3d" -> {n = 1, ell = 2} (n = N - ell - 1).
QuantumNumbers parse_state_label(const std::string& label);

}  // namespace mrbound
