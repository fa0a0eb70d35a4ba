#pragma once

#include <stdexcept>
#include <string>

namespace mrbound {

// Parameters of the exponential short-range potential
//   V(r) = pref * [ alpha(alpha-1) u^2/(1-u)^2 - A u/(1-u) ],  u = exp(-r/b).
// A and alpha are dimensionless, b is the screening length.
struct PotentialParams {
  double A = 0.0;
  double alpha = 0.0;
  double b = 1.0;  // must be > 0

  void validate() const {
    if (!(b > 0.0)) throw std::domain_error("PotentialParams: b must be > 0");
  }
};

// Resolves the energy prefactor hbar^2/(2 mu b^2).
// Atomic mode: hbar = mu = 1. Molecular mode: masses in amu with the
// amu -> energy constant K; two K conventions are supported (see units.hpp).
struct PhysicalConstants {
  enum class Mode { Atomic, Molecular };
  Mode mode = Mode::Atomic;
  double hbar_c = 1973.29;        // eV * Angstrom, molecular mode only
  double reduced_mass_amu = 0.0;  // molecular mode only
  double K = 0.0;                 // amu -> energy conversion, molecular mode only

  static PhysicalConstants atomic() { return {}; }
  static PhysicalConstants molecular(double mass_amu, double K_value,
                                     double hbar_c_value = 1973.29) {
    PhysicalConstants c;
    c.mode = Mode::Molecular;
    c.reduced_mass_amu = mass_amu;
    c.K = K_value;
    c.hbar_c = hbar_c_value;
    return c;
  }

  // hbar^2/(2 mu b^2) in the active unit system
  double prefactor(double b) const {
    if (mode == Mode::Atomic) return 1.0 / (2.0 * b * b);
    if (!(reduced_mass_amu > 0.0) || !(K > 0.0))
      throw std::domain_error("PhysicalConstants: molecular mode needs mass and K");
    return hbar_c * hbar_c / (2.0 * reduced_mass_amu * K * b * b);
  }

  // 2 mu / hbar^2, the Schroedinger kinetic factor
  double kinetic_factor(double b) const { return 1.0 / (prefactor(b) * b * b); }
};

enum class CentrifugalScheme { Approx1, Approx2, Approx3, Exact };

const char* scheme_name(CentrifugalScheme s);

// V(r) for the two-parameter exponential potential, r > 0.
double manning_rosen_value(double r, const PotentialParams& params,
                           const PhysicalConstants& consts);

// Screened attractive potential -V0 e^{-delta r} / (1 - e^{-delta r}).
double hulthen_value(double r, double V0, double delta);

// The 1/r^2 surrogate of the chosen scheme (exactly 1/r^2 for Exact).
double centrifugal_term(double r, double b, CentrifugalScheme scheme);

// V(r) + hbar^2/(2 mu) * l(l+1) * centrifugal surrogate.
double effective_potential(double r, const PotentialParams& params, int ell,
                           CentrifugalScheme scheme, const PhysicalConstants& consts);

}  // namespace mrbound
