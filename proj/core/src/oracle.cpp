#include "mrbound/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "mrbound/potentials.hpp"

namespace mrbound {

RadialGrid RadialGrid::defaults(QuantumNumbers qn, double b, int count) {
  RadialGrid g;
  g.r_min = 1e-6 * b;
  g.r_max = b * std::max(40.0, 20.0 * (qn.n + qn.ell + 1.0));
  g.count = count;
  return g;
}

OracleProblem make_problem(const PotentialParams& params, int ell,
                           CentrifugalScheme scheme, const PhysicalConstants& consts) {
  params.validate();
  if (ell < 0) throw std::domain_error("make_problem: ell must be >= 0");
  OracleProblem prob;
  prob.ell = ell;
  prob.kinetic = consts.kinetic_factor(params.b);
  prob.veff = [params, ell, scheme, consts](double r) {
    return effective_potential(r, params, ell, scheme, consts);
  };
  // small-r expansion of b^2 * (2 mu/hbar^2) V_eff in x = r/b, built from
  //   1/(e^x - 1)   = 1/x - 1/2 + x/12 - x^3/720 + ...
  //   1/(e^x - 1)^2 = 1/x^2 - 1/x + 5/12 - x/12 + x^2/240 + x^3/720 + ...
  const double W = params.alpha * (params.alpha - 1.0);
  const double A = params.A;
  const double L = ell * (ell + 1.0);
  const double p[5] = {1.0, -0.5, 1.0 / 12.0, 0.0, -1.0 / 720.0};       // 1/x .. x^3
  const double q[5] = {-1.0, 5.0 / 12.0, -1.0 / 12.0, 1.0 / 240.0, 1.0 / 720.0};
  double cl[5] = {0, 0, 0, 0, 0};  // centrifugal, powers 1/x .. x^3
  switch (scheme) {
    case CentrifugalScheme::Exact:
      break;
    case CentrifugalScheme::Approx1:
      cl[3] = 1.0 / 240.0;
      break;
    case CentrifugalScheme::Approx3:
      cl[1] = -1.0 / 12.0;
      cl[3] = 1.0 / 240.0;
      break;
    case CentrifugalScheme::Approx2: {
      const double e1 = std::exp(1.0 / params.b) - 1.0;
      cl[0] = e1;
      cl[1] = -1.0 / 12.0 - 0.5 * e1;
      cl[2] = e1 / 12.0;
      cl[3] = 1.0 / 240.0 - e1 / 720.0;
      break;
    }
  }
  prob.has_series = true;
  prob.s2 = W + L;
  const double b = params.b;
  double bpow = b;  // b^{j+2} for the r^j term, starting at j = -1
  for (int j = 0; j < 5; ++j) {
    prob.a_coeff[j] = (W * q[j] - A * p[j] + L * cl[j]) / bpow;
    bpow *= b;
  }
  return prob;
}

namespace {

// regular solution of the truncated small-r problem, u ~ r^t (1 + c1 r + ...)
double series_seed(const OracleProblem& prob, double r, double E, int max_terms = 80) {
  const double t = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * prob.s2));
  double a[5];
  for (int j = 0; j < 5; ++j) a[j] = prob.a_coeff[j];
  a[1] -= prob.kinetic * E;
  std::vector<double> c{1.0};
  double total = 1.0, rk = 1.0;
  for (int m = 1; m < max_terms; ++m) {
    double s = 0.0;
    // a[j] multiplies r^{j-1}; contribution pairs with c_{m-1-j}
    for (int j = 0; j < 5; ++j) {
      const int idx = m - 1 - j;
      if (idx >= 0 && idx < static_cast<int>(c.size())) s += a[j] * c[idx];
    }
    c.push_back(s / ((t + m) * (t + m - 1.0) - prob.s2));
    rk *= r;
    const double term = c[m] * rk;
    total += term;
    if (m > 4 && std::abs(term) < 1e-16 * std::abs(total)) break;
  }
  return std::pow(r, t) * total;
}

double fallback_seed(const OracleProblem& prob, double r) {
  return std::pow(r, prob.ell + 1.0);
}

struct SweepState {
  int nodes = 0;
  double defect = 0.0;
  bool hard_wall = false;
};

SweepState sweep(const OracleProblem& prob, double E, const RadialGrid& grid) {
  grid.validate();
  const int n = grid.count;
  const double h = grid.h();
  std::vector<double> r(n), f(n), w(n);
  for (int i = 0; i < n; ++i) {
    r[i] = grid.r_min + h * i;
    f[i] = prob.kinetic * (prob.veff(r[i]) - E);
    w[i] = 1.0 - h * h / 12.0 * f[i];
  }

  // outermost classical turning point; fall back to mid-grid for the
  // fully classical (hard-wall) case
  int m = -1;
  for (int i = n - 2; i >= 1; --i)
    if ((f[i] < 0.0) != (f[i + 1] < 0.0)) {
      m = i;
      break;
    }
  const bool hard_wall = (m < 0);
  if (hard_wall) {
    if (f[n - 1] > 0.0)
      throw std::domain_error("numerov_sweep: no classical region in the bracket");
    // an irrational fraction keeps the matching point away from the nodes
    // of low box modes, where the defect is singular
    m = static_cast<int>(0.381966 * n);
  }
  m = std::clamp(m, 5, n - 3);

  // outward start index: past the unresolved singular core when a series
  // seed is available, else straight from r_min
  int i0 = 1;
  if (prob.has_series) {
    int ia = 0;
    while (ia < n && std::abs(h * h * f[ia] / 12.0) >= 0.05) ++ia;
    const int ib = static_cast<int>(std::ceil((20.0 * h - grid.r_min) / h));
    i0 = std::max({ia, ib, 3});
    i0 = std::min(i0, m - 3);
    i0 = std::max(i0, 1);
  }

  std::vector<double> uo(m + 2, 0.0);
  if (prob.has_series) {
    uo[i0] = series_seed(prob, r[i0], E);
    uo[i0 + 1] = series_seed(prob, r[i0 + 1], E);
  } else {
    uo[i0] = fallback_seed(prob, r[i0]);
    uo[i0 + 1] = fallback_seed(prob, r[i0 + 1]);
  }
  for (int i = i0 + 1; i <= m; ++i) {
    uo[i + 1] = ((12.0 - 10.0 * w[i]) * uo[i] - w[i - 1] * uo[i - 1]) / w[i + 1];
    if (std::abs(uo[i + 1]) > 1e250)
      for (int j = i0; j <= i + 1; ++j) uo[j] /= 1e250;
  }

  std::vector<double> ui(n, 0.0);
  if (hard_wall) {
    ui[n - 1] = 0.0;
    ui[n - 2] = h;
  } else {
    const double kap = std::sqrt(std::max(f[n - 1], 1e-30));
    ui[n - 1] = std::exp(-kap * h);
    ui[n - 2] = 1.0;
  }
  for (int i = n - 2; i >= m; --i) {
    ui[i - 1] = ((12.0 - 10.0 * w[i]) * ui[i] - w[i + 1] * ui[i + 1]) / w[i - 1];
    if (std::abs(ui[i - 1]) > 1e250)
      for (int j = i - 1; j < n; ++j) ui[j] /= 1e250;
  }

  SweepState st;
  st.hard_wall = hard_wall;
  double prev = 0.0;
  bool have = false;
  for (int i = i0; i <= m; ++i) {
    if (uo[i] == 0.0) continue;
    if (have && ((prev < 0.0) != (uo[i] < 0.0))) ++st.nodes;
    prev = uo[i];
    have = true;
  }
  if (hard_wall) {
    // no decaying tail: the inward half oscillates too and its nodes count
    prev = 0.0;
    have = false;
    for (int i = m + 1; i <= n - 2; ++i) {
      if (ui[i] == 0.0) continue;
      if (have && ((prev < 0.0) != (ui[i] < 0.0))) ++st.nodes;
      prev = ui[i];
      have = true;
    }
  }
  if (prob.has_series && i0 > 1) {
    // nodes can hide below the seed radius
    const double lo = std::max(grid.r_min, 1e-3 * r[i0]);
    const double ratio = std::pow(r[i0] / lo, 1.0 / 79.0);
    double x = lo;
    prev = 0.0;
    have = false;
    for (int i = 0; i < 80; ++i, x *= ratio) {
      const double v = series_seed(prob, x, E);
      if (v == 0.0) continue;
      if (have && ((prev < 0.0) != (v < 0.0))) ++st.nodes;
      prev = v;
      have = true;
    }
  }

  if (uo[m] == 0.0 || ui[m] == 0.0)
    throw std::domain_error("numerov_sweep: zero at the matching point");
  st.defect = w[m - 1] * uo[m - 1] / uo[m] + w[m + 1] * ui[m + 1] / ui[m] -
              (12.0 - 10.0 * w[m]);
  return st;
}

}  // namespace

std::pair<int, double> numerov_sweep(const OracleProblem& prob, double E,
                                     const RadialGrid& grid) {
  const SweepState st = sweep(prob, E, grid);
  return {st.nodes, st.defect};
}

ShootingResult shoot_eigenvalue(const OracleProblem& prob, QuantumNumbers qn,
                                double bracket_lo, double bracket_hi, double tol,
                                const RadialGrid& grid) {
  qn.validate();
  if (!(bracket_hi > bracket_lo))
    throw std::invalid_argument("shoot_eigenvalue: empty bracket");
  const int scan = 80;
  int iters = 0;
  double e_prev = 0.0, d_prev = 0.0;
  int nodes_prev = -1;
  bool have_prev = false;
  for (int i = 0; i <= scan; ++i) {
    const double e = bracket_lo + (bracket_hi - bracket_lo) * i / scan;
    const SweepState st = sweep(prob, e, grid);
    ++iters;
    if (nodes_prev >= 0 && st.nodes < nodes_prev)
      throw std::runtime_error("shoot_eigenvalue: node count decreased with energy");
    nodes_prev = st.nodes;
    // in a fully classical box the node enters the interior exactly at the
    // eigenvalue, so the crossing interval's upper end may already count
    // n + 1; the defect itself stays continuous through the step
    const bool right_ok =
        st.nodes == qn.n || (st.hard_wall && st.nodes == qn.n + 1);
    if (have_prev && right_ok && ((d_prev < 0.0) != (st.defect < 0.0))) {
      double lo = e_prev, hi = e, dlo = d_prev;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const SweepState sm = sweep(prob, mid, grid);
        ++iters;
        const bool keep_lo =
            st.hard_wall
                ? (sm.defect < 0.0) == (dlo < 0.0)
                : sm.nodes < qn.n ||
                      (sm.nodes == qn.n && (sm.defect < 0.0) == (dlo < 0.0));
        if (keep_lo) {
          lo = mid;
          dlo = sm.defect;
        } else {
          hi = mid;
        }
        if (iters > 400) break;
      }
      const double e_fin = 0.5 * (lo + hi);
      const SweepState sf = sweep(prob, e_fin, grid);
      return {e_fin, st.hard_wall ? qn.n : sf.nodes, std::abs(sf.defect), iters};
    }
    if (st.nodes == qn.n) {
      e_prev = e;
      d_prev = st.defect;
      have_prev = true;
    } else {
      have_prev = false;
    }
  }
  throw std::runtime_error(
      "shoot_eigenvalue: no eigenvalue with the requested node count in bracket");
}

}  // namespace mrbound
