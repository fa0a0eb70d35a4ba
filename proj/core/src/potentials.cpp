#include "mrbound/potentials.hpp"

#include <cmath>

namespace mrbound {

const char* scheme_name(CentrifugalScheme s) {
  switch (s) {
    case CentrifugalScheme::Approx1: return "approx1";
    case CentrifugalScheme::Approx2: return "approx2";
    case CentrifugalScheme::Approx3: return "approx3";
    case CentrifugalScheme::Exact: return "exact";
  }
  return "?";
}

namespace {
// u = exp(-r/b), clamped away from u = 1 (the r -> 0 pole)
double screened_u(double r, double b) {
  if (!(r > 0.0)) throw std::domain_error("r must be > 0");
  const double r_eff = std::max(r, 1e-12 * b);
  return std::exp(-r_eff / b);
}
}  // namespace

double manning_rosen_value(double r, const PotentialParams& params,
                           const PhysicalConstants& consts) {
  params.validate();
  const double u = screened_u(r, params.b);
  const double g = u / (1.0 - u);
  return consts.prefactor(params.b) *
         (params.alpha * (params.alpha - 1.0) * g * g - params.A * g);
}

double hulthen_value(double r, double V0, double delta) {
  if (!(r > 0.0)) throw std::domain_error("r must be > 0");
  if (!(delta > 0.0)) throw std::domain_error("delta must be > 0");
  const double u = screened_u(r, 1.0 / delta);
  return -V0 * u / (1.0 - u);
}

double centrifugal_term(double r, double b, CentrifugalScheme scheme) {
  if (!(r > 0.0)) throw std::domain_error("r must be > 0");
  if (!(b > 0.0)) throw std::domain_error("b must be > 0");
  if (scheme == CentrifugalScheme::Exact) return 1.0 / (r * r);
  const double u = screened_u(r, b);
  const double om = 1.0 - u;
  switch (scheme) {
    case CentrifugalScheme::Approx1:
      return (1.0 / 12.0 + u / (om * om)) / (b * b);
    case CentrifugalScheme::Approx2:
      return (std::exp(1.0 / b) * u / om + u * u / (om * om)) / (b * b);
    case CentrifugalScheme::Approx3:
      return (u / (om * om)) / (b * b);
    default:
      break;
  }
  throw std::logic_error("unreachable");
}

double effective_potential(double r, const PotentialParams& params, int ell,
                           CentrifugalScheme scheme, const PhysicalConstants& consts) {
  if (ell < 0) throw std::domain_error("ell must be >= 0");
  double v = manning_rosen_value(r, params, consts);
  if (ell > 0) {
    // hbar^2/(2 mu) = prefactor * b^2
    v += consts.prefactor(params.b) * params.b * params.b * ell * (ell + 1.0) *
         centrifugal_term(r, params.b, scheme);
  }
  return v;
}

}  // namespace mrbound
