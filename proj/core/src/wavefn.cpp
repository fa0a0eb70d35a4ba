#include "mrbound/wavefn.hpp"

#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>

namespace mrbound {

double pochhammer(double sigma, int n) {
  if (n < 0) throw std::domain_error("pochhammer: n must be >= 0");
  double p = 1.0;
  for (int j = 0; j < n; ++j) p *= sigma + j;
  return p;
}

double gauss_2f1_terminating(int n, double bparam, double c, double z) {
  if (n < 0) throw std::domain_error("gauss_2f1_terminating: n must be >= 0");
  for (int j = 0; j < n; ++j)
    if (c + j == 0.0)
      throw std::domain_error("gauss_2f1_terminating: c hits a non-positive integer");
  // extended accumulation: for |z| > 1 the alternating terms grow well past
  // the final value before cancelling
  long double sum = 1.0L, term = 1.0L;
  for (int j = 1; j <= n; ++j) {
    term *= static_cast<long double>(-(n - j + 1.0)) * (bparam + j - 1.0) /
            ((c + j - 1.0) * j) * z;
    sum += term;
  }
  return static_cast<double>(sum);
}

RadialWavefunction::RadialWavefunction(QuantumNumbers qn, double gamma, double beta,
                                       double t, double b)
    : n_(qn.n), ell_(qn.ell), gamma_(gamma), beta_(beta), t_(t), b_(b) {
  if (!(beta > 0.0) || !(t > 0.0))
    throw std::domain_error("RadialWavefunction: state does not decay at both ends");
}

double RadialWavefunction::operator()(double r) const {
  if (!(r > 0.0)) throw std::domain_error("r must be > 0");
  const double u = std::exp(-r / b_);
  const double f =
      gauss_2f1_terminating(n_, n_ + 2.0 * (beta_ + t_), 2.0 * beta_ + 1.0, u);
  return norm_ * std::exp(-beta_ * r / b_) * std::pow(1.0 - u, t_) * f;
}

void RadialWavefunction::set_norm(double v) {
  if (!(v > 0.0)) throw std::domain_error("norm must be > 0");
  norm_ = v;
}

RadialWavefunction radial_wavefunction(QuantumNumbers qn,
                                       const PotentialParams& params,
                                       CentrifugalScheme scheme,
                                       const PhysicalConstants& consts) {
  const EnergyResult er = energy_manning_rosen(qn, params, scheme, consts);
  if (!er.bound)
    throw std::domain_error("radial_wavefunction: state is not bound");
  const double et = eps_tilde(er.value, params.b, consts);
  const double gamma = std::sqrt(scheme_T(scheme, qn.ell, params) - et);
  const double beta = std::sqrt(scheme_C(scheme, qn.ell) - et);
  const double t = gamma - beta - qn.n;
  return RadialWavefunction(qn, gamma, beta, t, params.b);
}

namespace {

using TablePtr =
    std::unique_ptr<gsl_integration_glfixed_table,
                    decltype(&gsl_integration_glfixed_table_free)>;

// integral of f over log-spaced panels spanning (r_lo, r_max]
template <typename F>
double panel_integral(const F& f, double r_lo, double r_max, int panels, int pts) {
  if (!(r_max > r_lo) || panels < 1 || pts < 2)
    throw std::invalid_argument("panel_integral: bad quadrature setup");
  TablePtr table(gsl_integration_glfixed_table_alloc(static_cast<size_t>(pts)),
                 gsl_integration_glfixed_table_free);
  const double ratio = std::pow(r_max / r_lo, 1.0 / panels);
  double total = 0.0, a = r_lo;
  for (int p = 0; p < panels; ++p) {
    const double b = (p + 1 == panels) ? r_max : a * ratio;
    for (size_t i = 0; i < static_cast<size_t>(pts); ++i) {
      double xi, wi;
      gsl_integration_glfixed_point(a, b, i, &xi, &wi, table.get());
      total += wi * f(xi);
    }
    a = b;
  }
  return total;
}

}  // namespace

double square_integral(const RadialWavefunction& wf, double r_max, int panels,
                       int pts) {
  return panel_integral([&wf](double r) { const double v = wf(r); return v * v; },
                        1e-8 * wf.b(), r_max, panels, pts);
}

double overlap_integral(const RadialWavefunction& a, const RadialWavefunction& b,
                        double r_max, int panels, int pts) {
  return panel_integral([&](double r) { return a(r) * b(r); }, 1e-8 * a.b(), r_max,
                        panels, pts);
}

RadialWavefunction normalize(RadialWavefunction wf, double r_max, int panels,
                             int pts) {
  const double i2 = square_integral(wf, r_max, panels, pts);
  if (!(i2 > 0.0) || !std::isfinite(i2))
    throw std::domain_error("normalize: non-normalizable input");
  wf.set_norm(wf.norm() / std::sqrt(i2));
  return wf;
}

int count_nodes(const RadialWavefunction& wf, double r_lo, double r_hi,
                int samples) {
  int nodes = 0;
  double prev = 0.0;
  bool have_prev = false;
  const double ratio = std::pow(r_hi / r_lo, 1.0 / (samples - 1));
  double r = r_lo;
  for (int i = 0; i < samples; ++i, r *= ratio) {
    const double v = wf(r);
    if (v == 0.0) continue;
    if (have_prev && ((prev < 0.0) != (v < 0.0))) ++nodes;
    prev = v;
    have_prev = true;
  }
  return nodes;
}

double default_r_max(QuantumNumbers qn, double b) {
  return b * std::max(40.0, 20.0 * (qn.n + qn.ell + 1.0));
}

}  // namespace mrbound
