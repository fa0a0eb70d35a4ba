#include "mrbound/closedform.hpp"

#include <cmath>

namespace mrbound {

double zeta(int ell, const PotentialParams& params) {
  params.validate();
  if (1.0 / params.b > 700.0)
    throw std::range_error("zeta: exp(1/b) overflows for b this small");
  const double L = ell * (ell + 1.0);
  return params.alpha * (params.alpha - 1.0) + params.A +
         L * (1.0 - std::exp(1.0 / params.b));
}

double eps_tilde(double E, double b, const PhysicalConstants& consts) {
  return E / consts.prefactor(b);
}

LambdaCoefficients lambda_coefficients(const PotentialParams& params, int ell,
                                       double E, const PhysicalConstants& consts) {
  const double L = ell * (ell + 1.0);
  const double et = eps_tilde(E, params.b, consts);
  LambdaCoefficients lc;
  lc.lambda_a = -(params.alpha * (params.alpha + 1.0) + L);
  lc.lambda_b = lc.lambda_a - params.alpha * (params.alpha - 1.0) - params.A;
  lc.lambda_c = lc.lambda_b - lc.lambda_a - L / 12.0 + et;
  return lc;
}

double scheme_T(CentrifugalScheme scheme, int ell, const PotentialParams& params) {
  const double L = ell * (ell + 1.0);
  const double base = params.alpha * (params.alpha - 1.0) + params.A;
  switch (scheme) {
    case CentrifugalScheme::Approx1: return base + L / 12.0;
    case CentrifugalScheme::Approx2: return zeta(ell, params);
    case CentrifugalScheme::Approx3: return base;
    default:
      throw std::invalid_argument("scheme_T: no closed form for the exact term");
  }
}

double scheme_C(CentrifugalScheme scheme, int ell) {
  if (scheme == CentrifugalScheme::Approx1) return ell * (ell + 1.0) / 12.0;
  if (scheme == CentrifugalScheme::Exact)
    throw std::invalid_argument("scheme_C: no closed form for the exact term");
  return 0.0;
}

EnergyResult energy_manning_rosen(QuantumNumbers qn, const PotentialParams& params,
                                  CentrifugalScheme scheme,
                                  const PhysicalConstants& consts) {
  qn.validate();
  params.validate();
  if (scheme == CentrifugalScheme::Exact)
    throw std::invalid_argument(
        "energy_manning_rosen: exact centrifugal term has no closed form; "
        "use the shooting oracle");
  const double disc =
      1.0 + 4.0 * params.alpha * (params.alpha - 1.0) + 4.0 * qn.ell * (qn.ell + 1.0);
  if (disc < 0.0)
    throw std::domain_error("energy_manning_rosen: negative discriminant");
  // All three schemes share one factored form. With
  //   Q = (n + 1/2) + sqrt(disc)/2
  // the dimensionless energy is T - [(Q^2 + c)/(2Q)]^2 where c is the
  // scheme's coupling constant (c equals T for schemes 2 and 3, and
  // T - l(l+1)/12 for scheme 1).
  const double T = scheme_T(scheme, qn.ell, params);
  const double c = T - scheme_C(scheme, qn.ell);
  const double Q = (qn.n + 0.5) + 0.5 * std::sqrt(disc);
  const double bracket = (Q * Q + c) / (2.0 * Q);
  const double et = T - bracket * bracket;
  EnergyResult res;
  res.value = et * consts.prefactor(params.b);
  res.scheme = scheme;
  res.bound = res.value < 0.0;
  return res;
}

double energy_swave(int n, const PotentialParams& params,
                    const PhysicalConstants& consts) {
  if (n < 0) throw std::domain_error("energy_swave: n must be >= 0");
  params.validate();
  // the potential depends on alpha only through alpha (alpha - 1), and the
  // regular solution selects the representative >= 1/2; using it keeps this
  // formula consistent with the l = 0 limit of the general closed form
  const double al = 0.5 + std::abs(params.alpha - 0.5);
  const double an = al + n;
  const double bracket =
      (params.A - al) / (2.0 * an) - n * (n + 2.0 * al) / (2.0 * an);
  return -consts.prefactor(params.b) * bracket * bracket;
}

double energy_hulthen(QuantumNumbers qn, double A, double b, CentrifugalScheme scheme,
                      const PhysicalConstants& consts) {
  qn.validate();
  if (qn.ell == 0) return energy_hulthen_swave(qn.n, A, b, consts);
  PotentialParams p{A, 1.0, b};
  return energy_manning_rosen(qn, p, scheme, consts).value;
}

double energy_hulthen_swave(int n, double A, double b, const PhysicalConstants& consts) {
  if (n < 0) throw std::domain_error("energy_hulthen_swave: n must be >= 0");
  const double np1 = n + 1.0;
  const double d = A - np1 * np1;
  // hbar^2/(8 mu b^2) = prefactor / 4
  return -d * d / (np1 * np1) * consts.prefactor(b) / 4.0;
}

QuantumNumbers parse_state_label(const std::string& label) {
  if (label.size() != 2 || label[0] < '2' || label[0] > '9')
    throw std::invalid_argument("state label must match [2-9][spdfg]: " + label);
  int ell;
  switch (label[1]) {
    case 's': ell = 0; break;
    case 'p': ell = 1; break;
    case 'd': ell = 2; break;
    case 'f': ell = 3; break;
    case 'g': ell = 4; break;
    default:
      throw std::invalid_argument("state label must match [2-9][spdfg]: " + label);
  }
  const int N = label[0] - '0';
  if (N - ell - 1 < 0)
    throw std::invalid_argument("state label has n < 0: " + label);
  return {N - ell - 1, ell};
}

}  // namespace mrbound
