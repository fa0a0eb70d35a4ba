#include "mrbound/aim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mrbound {

// ---------------------------------------------------------------- Poly

void Poly::trim() {
  while (!c.empty() && c.back() == 0.0) c.pop_back();
}

double Poly::eval(double x) const {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
  return v;
}

Poly Poly::derivative() const {
  Poly d;
  if (c.size() < 2) return d;
  d.c.resize(c.size() - 1);
  for (size_t i = 1; i < c.size(); ++i) d.c[i - 1] = c[i] * static_cast<double>(i);
  d.trim();
  return d;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0.0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
  r.trim();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-1.0 * b); }

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0.0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  r.trim();
  return r;
}

Poly operator*(double k, const Poly& p) {
  Poly r = p;
  for (auto& v : r.c) v *= k;
  r.trim();
  return r;
}

// ---------------------------------------------------------------- Poly2

Poly2 Poly2::constant(double v) {
  Poly2 p;
  if (v != 0.0) p.cx.push_back(Poly{v});
  return p;
}

Poly2 Poly2::from_x(std::vector<double> coeffs) {
  Poly2 p;
  p.cx.reserve(coeffs.size());
  for (double v : coeffs) p.cx.push_back(Poly{v});
  p.trim();
  return p;
}

Poly2 Poly2::eps_linear(double c0, double c1) {
  Poly2 p;
  p.cx.push_back(Poly{c0, c1});
  p.trim();
  return p;
}

void Poly2::trim() {
  while (!cx.empty() && cx.back().is_zero()) cx.pop_back();
}

double Poly2::eval(double x, double eps) const {
  double v = 0.0;
  for (auto it = cx.rbegin(); it != cx.rend(); ++it) v = v * x + it->eval(eps);
  return v;
}

Poly Poly2::bind(double eps) const {
  Poly p;
  p.c.reserve(cx.size());
  for (const auto& ce : cx) p.c.push_back(ce.eval(eps));
  p.trim();
  return p;
}

Poly2 Poly2::dx() const {
  Poly2 d;
  if (cx.size() < 2) return d;
  d.cx.resize(cx.size() - 1);
  for (size_t i = 1; i < cx.size(); ++i)
    d.cx[i - 1] = static_cast<double>(i) * cx[i];
  d.trim();
  return d;
}

Poly2 operator+(const Poly2& a, const Poly2& b) {
  Poly2 r;
  r.cx.resize(std::max(a.cx.size(), b.cx.size()));
  for (size_t i = 0; i < a.cx.size(); ++i) r.cx[i] = r.cx[i] + a.cx[i];
  for (size_t i = 0; i < b.cx.size(); ++i) r.cx[i] = r.cx[i] + b.cx[i];
  r.trim();
  return r;
}

Poly2 operator-(const Poly2& a, const Poly2& b) {
  Poly2 nb = b;
  for (auto& p : nb.cx) p = -1.0 * p;
  return a + nb;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  if (a.is_zero() || b.is_zero()) return r;
  r.cx.resize(a.cx.size() + b.cx.size() - 1);
  for (size_t i = 0; i < a.cx.size(); ++i)
    for (size_t j = 0; j < b.cx.size(); ++j)
      r.cx[i + j] = r.cx[i + j] + a.cx[i] * b.cx[j];
  r.trim();
  return r;
}

// ------------------------------------------------------ SymbolicRational

SymbolicRational::SymbolicRational(Poly2 n, Poly2 d) : num(std::move(n)), den(std::move(d)) {
  if (den.is_zero())
    throw std::invalid_argument("SymbolicRational: denominator identically zero");
}

double SymbolicRational::eval(double x, double eps) const {
  const double d = den.eval(x, eps);
  if (d == 0.0) throw std::domain_error("SymbolicRational: evaluation at a pole");
  return num.eval(x, eps) / d;
}

SymbolicRational SymbolicRational::dx() const {
  return {num.dx() * den - num * den.dx(), den * den};
}

SymbolicRational operator+(const SymbolicRational& a, const SymbolicRational& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

SymbolicRational operator*(const SymbolicRational& a, const SymbolicRational& b) {
  return {a.num * b.num, a.den * b.den};
}

// ------------------------------------------------------------- iterate

namespace {
constexpr int kDegreeCapFactor = 4;

void check_degree(const SymbolicRational& r, int max_k) {
  const int cap = kDegreeCapFactor * std::max(max_k, 8);
  if (r.num.xdegree() > cap || r.den.xdegree() > cap)
    throw std::length_error("coefficient pair exceeded the degree cap");
}
}  // namespace

CoefficientPair iterate(const CoefficientPair& pair, const CoefficientPair& pair0) {
  CoefficientPair next;
  next.lambda = pair.lambda.dx() + pair.s + pair0.lambda * pair.lambda;
  next.s = pair.s.dx() + pair0.s * pair.lambda;
  next.k = pair.k + 1;
  // rational operations do not cancel common factors, so symbolic levels
  // grow fast; the cap still bounds runaway growth
  check_degree(next.lambda, 48);
  check_degree(next.s, 48);
  return next;
}

double quantization_delta(const CoefficientPair& pair_k,
                          const CoefficientPair& pair_km1, double x0, double eps) {
  if (pair_km1.k != pair_k.k - 1)
    throw std::invalid_argument("quantization_delta: levels must be consecutive");
  return pair_k.lambda.eval(x0, eps) * pair_km1.s.eval(x0, eps) -
         pair_km1.lambda.eval(x0, eps) * pair_k.s.eval(x0, eps);
}

// --------------------------------------------------- numeric fast path

namespace {

// dense long double polynomial helpers for the numeric chain; the extra
// mantissa bits matter because the determinant loses roughly two digits of
// relative accuracy per level
using LPoly = std::vector<long double>;

LPoly lp_from(const Poly& p) { return LPoly(p.c.begin(), p.c.end()); }

LPoly lp_deriv(const LPoly& p) {
  LPoly r;
  for (size_t i = 1; i < p.size(); ++i) r.push_back(p[i] * static_cast<long double>(i));
  return r;
}

LPoly lp_mul(const LPoly& a, const LPoly& b) {
  if (a.empty() || b.empty()) return {};
  LPoly r(a.size() + b.size() - 1, 0.0L);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void lp_axpy(LPoly& a, const LPoly& b, long double s) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0L);
  for (size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
}

// p(u + x0) by repeated synthetic division; centering the chain at the
// evaluation point makes delta a constant-term readoff instead of a
// catastrophically cancelling high-degree evaluation
void lp_shift(LPoly& p, long double x0) {
  if (x0 == 0.0L || p.size() < 2) return;
  const int d = static_cast<int>(p.size()) - 1;
  for (int i = 0; i < d; ++i)
    for (int j = d - 1; j >= i; --j) p[j] += x0 * p[j + 1];
}

// Level-k pair as numerators over an implicit common denominator power:
// lambda_k = A/D^{k+1}, s_k = B/D^{k+1}, all in powers of u = x - x0.
// Rescaling by a positive factor per level keeps coefficients bounded and
// preserves the sign of delta.
struct Chain {
  LPoly N0, M0, D, Dp;
  LPoly A, B;        // level j
  LPoly Apm, Bpm;    // level j-1
  int j = 0;

  static Chain from(const CoefficientPair& p0, double eps, int max_k, double x0) {
    Chain c;
    const Poly ln = p0.lambda.num.bind(eps), ld = p0.lambda.den.bind(eps);
    const Poly sn = p0.s.num.bind(eps), sd = p0.s.den.bind(eps);
    if (ld.is_zero() || sd.is_zero())
      throw std::domain_error("pair denominator vanishes at this eps");
    if (ld.c == sd.c) {
      c.D = lp_from(ld);
      c.N0 = lp_from(ln);
      c.M0 = lp_from(sn);
    } else {
      c.D = lp_mul(lp_from(ld), lp_from(sd));
      c.N0 = lp_mul(lp_from(ln), lp_from(sd));
      c.M0 = lp_mul(lp_from(sn), lp_from(ld));
    }
    const int cap = kDegreeCapFactor * std::max(max_k, 8);
    if ((static_cast<int>(c.D.size()) - 1) * (max_k + 1) > cap * 2)
      throw std::length_error("coefficient pair exceeded the degree cap");
    lp_shift(c.D, x0);
    lp_shift(c.N0, x0);
    lp_shift(c.M0, x0);
    c.Dp = lp_deriv(c.D);
    c.A = c.N0;
    c.B = c.M0;
    c.j = 0;
    return c;
  }

  void step() {
    LPoly A1 = lp_mul(lp_deriv(A), D);
    lp_axpy(A1, lp_mul(A, Dp), -static_cast<long double>(j + 1));
    lp_axpy(A1, lp_mul(B, D), 1.0L);
    lp_axpy(A1, lp_mul(N0, A), 1.0L);
    LPoly B1 = lp_mul(lp_deriv(B), D);
    lp_axpy(B1, lp_mul(B, Dp), -static_cast<long double>(j + 1));
    lp_axpy(B1, lp_mul(M0, A), 1.0L);
    long double m = 0.0L;
    for (long double v : A1) m = std::max(m, std::abs(v));
    for (long double v : B1) m = std::max(m, std::abs(v));
    if (m > 0.0L) {
      const long double inv = 1.0L / m;
      for (auto& v : A1) v *= inv;
      for (auto& v : B1) v *= inv;
    }
    Apm = std::move(A);
    Bpm = std::move(B);
    A = std::move(A1);
    B = std::move(B1);
    ++j;
  }

  // scaled delta_j at the centering point (valid for j >= 1)
  double delta() const {
    const long double a0 = A.empty() ? 0.0L : A[0];
    const long double b0 = B.empty() ? 0.0L : B[0];
    const long double am = Apm.empty() ? 0.0L : Apm[0];
    const long double bm = Bpm.empty() ? 0.0L : Bpm[0];
    return static_cast<double>(a0 * bm - am * b0);
  }
};

double delta_scalar(const std::function<CoefficientPair(double)>& build, double eps,
                    int k, double x0, int max_k) {
  Chain c = Chain::from(build(eps), eps, max_k, x0);
  if (c.D.empty() || c.D[0] == 0.0L)
    throw std::domain_error("solve_eigenvalues: x0 is a pole of the pair");
  for (int j = 0; j < k; ++j) c.step();
  return c.delta();
}

struct Tracker {
  double value;
  int consec = 0;
  bool seen_this_k = false;
  bool accepted = false;
  int k_used = 0;
  double residual = 0.0;
};

std::vector<AimRoot> drive(const std::function<CoefficientPair(double)>& build,
                           const AimConfig& config) {
  if (config.max_k < 2) throw std::invalid_argument("AimConfig: max_k must be >= 2");
  if (!(config.tol > 0.0)) throw std::invalid_argument("AimConfig: tol must be > 0");
  if (!(config.bracket_hi > config.bracket_lo))
    throw std::invalid_argument("AimConfig: empty bracket");

  const double x0 = config.x0;
  std::vector<Tracker> trackers;
  bool any_nonzero = false;
  double best_residual = std::numeric_limits<double>::infinity();

  for (int k = 2; k <= config.max_k; ++k) {
    auto f = [&](double e) { return delta_scalar(build, e, k, x0, config.max_k); };

    // sign-change scan; an exact zero at a scan point is itself a root and
    // would otherwise defeat the strict sign test on both sides
    std::vector<double> roots;
    const int nsub = std::max(config.bracket_subdivisions, 8);
    double eprev = config.bracket_lo;
    double fprev = f(eprev);
    if (fprev != 0.0) any_nonzero = true;
    if (fprev == 0.0) {
      roots.push_back(eprev);
      best_residual = 0.0;
    }
    for (int i = 1; i <= nsub; ++i) {
      const double e = config.bracket_lo +
                       (config.bracket_hi - config.bracket_lo) * i / nsub;
      const double fe = f(e);
      if (fe != 0.0) any_nonzero = true;
      if (fe == 0.0) {
        roots.push_back(e);
        best_residual = 0.0;
      } else if ((fprev < 0.0 && fe > 0.0) || (fprev > 0.0 && fe < 0.0)) {
        // bisection
        double lo = eprev, hi = e, flo = fprev;
        for (int it = 0; it < 200 && (hi - lo) > config.tol / 4.0; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = f(mid);
          if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        // secant polish
        double r0 = lo, r1 = hi, f0 = f(r0), f1 = f(r1);
        for (int it = 0; it < 3 && f1 != f0; ++it) {
          const double r2 = r1 - f1 * (r1 - r0) / (f1 - f0);
          if (!(r2 >= lo - config.tol && r2 <= hi + config.tol)) break;
          r0 = r1;
          f0 = f1;
          r1 = r2;
          f1 = f(r1);
        }
        roots.push_back(std::abs(f1) <= std::abs(f0) ? r1 : r0);
        best_residual = std::min(best_residual, std::min(std::abs(f0), std::abs(f1)));
      }
      eprev = e;
      fprev = fe;
    }

    if (k == 2 && !any_nonzero) throw AimDegenerateError();

    // match roots against trackers from the previous level
    for (auto& t : trackers) t.seen_this_k = false;
    for (double r : roots) {
      Tracker* bestt = nullptr;
      double bestd = std::numeric_limits<double>::infinity();
      for (auto& t : trackers) {
        const double d = std::abs(t.value - r);
        if (d < bestd && !t.seen_this_k) {
          bestd = d;
          bestt = &t;
        }
      }
      if (bestt && bestd < config.tol) {
        bestt->consec += 1;
        bestt->value = r;
        bestt->seen_this_k = true;
        if (bestt->consec >= 1 && !bestt->accepted) {
          bestt->accepted = true;
          bestt->k_used = k;
          bestt->residual = std::abs(f(r));
        }
      } else {
        trackers.push_back({r, 0, true, false, 0, 0.0});
      }
    }
    // drop unaccepted trackers that did not reappear
    trackers.erase(std::remove_if(trackers.begin(), trackers.end(),
                                  [](const Tracker& t) {
                                    return !t.accepted && !t.seen_this_k;
                                  }),
                   trackers.end());
  }

  std::vector<AimRoot> out;
  for (const auto& t : trackers)
    if (t.accepted) out.push_back({t.value, t.k_used, t.residual});
  std::sort(out.begin(), out.end(),
            [](const AimRoot& a, const AimRoot& b) { return a.eps < b.eps; });
  if (out.empty()) throw AimConvergenceError(config.max_k, best_residual);
  return out;
}

}  // namespace

double quantization_delta_scaled(const CoefficientPair& pair0, int k, double x0,
                                 double eps) {
  if (pair0.k != 0)
    throw std::invalid_argument("quantization_delta_scaled: needs a level-0 pair");
  if (k < 1)
    throw std::invalid_argument("quantization_delta_scaled: k must be >= 1");
  return delta_scalar([&pair0](double) { return pair0; }, eps, k, x0, k);
}

std::vector<AimRoot> solve_eigenvalues(const CoefficientPair& pair0,
                                       const AimConfig& config) {
  return drive([&pair0](double) { return pair0; }, config);
}

std::vector<AimRoot> solve_eigenvalues(const ParametricPair& pair,
                                       const AimConfig& config) {
  return drive(pair.build, config);
}

// -------------------------------------------------------- reductions

CoefficientPair pair_from_gamma_beta(double gamma, double beta, double lambda_a) {
  const double d = gamma - beta;
  const double F0 = lambda_a + d * d + d;
  CoefficientPair p;
  // lambda0 = (2 beta - 1)/(1+z) - (2 gamma + 1)/z over z(1+z)
  p.lambda = SymbolicRational(
      Poly2::from_x({-(2.0 * gamma + 1.0), 2.0 * (beta - gamma - 1.0)}),
      Poly2::from_x({0.0, 1.0, 1.0}));
  p.s = SymbolicRational(Poly2::constant(-F0), Poly2::from_x({0.0, 1.0, 1.0}));
  p.k = 0;
  return p;
}

ParametricPair mr_to_aim(const PotentialParams& params, int ell,
                         CentrifugalScheme scheme, const PhysicalConstants& consts) {
  params.validate();
  if (scheme == CentrifugalScheme::Exact)
    throw std::invalid_argument("mr_to_aim: exact centrifugal term not reducible");
  const double T = scheme_T(scheme, ell, params);
  const double C = scheme_C(scheme, ell);
  const double lambda_a = -(params.alpha * (params.alpha - 1.0) + ell * (ell + 1.0));
  const double b = params.b;
  ParametricPair pp;
  pp.default_x0 = -2.0;  // image of r = b ln 2, away from the z = -1, 0 poles
  pp.build = [T, C, lambda_a, b, consts](double E) {
    const double et = eps_tilde(E, b, consts);
    const double rg = T - et, rb = C - et;
    if (rg < 0.0 || rb < 0.0)
      throw std::domain_error("mr_to_aim: energy outside the bound spectrum");
    // decaying branches; the positive roots admit no quantization root
    const double gamma = -std::sqrt(rg);
    const double beta = -std::sqrt(rb);
    return pair_from_gamma_beta(gamma, beta, lambda_a);
  };
  return pp;
}

// -------------------------------------------------- solvable-form match

namespace {
bool near_zero(double v, double scale) { return std::abs(v) <= 1e-9 * scale; }

double poly_scale(const Poly& p) {
  double m = 0.0;
  for (double v : p.c) m = std::max(m, std::abs(v));
  return m > 0.0 ? m : 1.0;
}
}  // namespace

bool match_solvable_form(const CoefficientPair& pair0, double eps, SolvableForm& out) {
  const Poly R = pair0.s.num.bind(eps);
  const Poly S = pair0.s.den.bind(eps);
  const Poly P = pair0.lambda.num.bind(eps);
  const Poly Q = pair0.lambda.den.bind(eps);
  if (S.is_zero() || Q.is_zero()) return false;

  // s0 = -W x^N / (1 - b x^{N+2}); stored over polynomials this reads
  //   N >= 0: R = -W x^N,      S = c (1 - b x^{N+2})
  //   N = -1: R = -W (const),  S = c x (1 - b x)
  const double sR = poly_scale(R), sS = poly_scale(S);
  int N;
  double W, b;
  int nzR = -1;
  for (int i = 0; i <= R.degree(); ++i)
    if (!near_zero(R.c[i], sR)) {
      if (nzR >= 0) return false;  // not a monomial
      nzR = i;
    }

  if (S.degree() >= 1 && near_zero(S.c[0], sS)) {
    // shifted case: S = c x (1 - b x^{N+2}) with N = nzR - 1. When the s0
    // numerator cancels exactly (the pair was built right at an eigenvalue)
    // W = 0 and the power is read off the denominator instead.
    if (nzR >= 0) {
      N = nzR - 1;
    } else if (S.degree() >= 2) {
      N = S.degree() - 3;
    } else {
      return false;
    }
    const int top = N + 3;
    if (S.degree() > top) return false;
    const double cnorm = S.c[1];
    if (near_zero(cnorm, sS)) return false;
    for (int i = 2; i <= S.degree(); ++i)
      if (i != top && !near_zero(S.c[i], sS)) return false;
    b = (S.degree() >= top && top < static_cast<int>(S.c.size()))
            ? -S.c[top] / cnorm
            : 0.0;
    W = nzR >= 0 ? -R.c[nzR] / cnorm : 0.0;
    // lambda0 over the same denominator: Q = q x (1 - b x^{N+2}),
    // P = q [ (2a + 2(m+1)b) x^{N+2} - 2(m+1) ]
    const double sQ = poly_scale(Q);
    if (Q.degree() > top || Q.degree() < 1 || near_zero(Q.c[1], sQ)) return false;
    if (!near_zero(Q.degree() >= 0 ? Q.c[0] : 0.0, sQ)) return false;
    for (int i = 2; i <= Q.degree(); ++i)
      if (i != top && !near_zero(Q.c[i], sQ)) return false;
    const double q = Q.c[1];
    const double bq = (Q.degree() >= top) ? -Q.c[top] / q : 0.0;
    if (std::abs(bq - b) > 1e-9 * (1.0 + std::abs(b))) return false;
    const int pw = N + 2;
    const double sP = poly_scale(P);
    for (int i = 0; i <= P.degree(); ++i)
      if (i != 0 && i != pw && !near_zero(P.c[i], sP)) return false;
    const double p0 = P.degree() >= 0 ? P.c[0] : 0.0;
    const double ppw = P.degree() >= pw ? P.c[pw] : 0.0;
    const double m = -p0 / (2.0 * q) - 1.0;
    const double a = ppw / (2.0 * q) - (m + 1.0) * b;
    if (b == 0.0) return false;  // sigma/rho undefined
    out.a = a;
    out.b_coef = b;
    out.N = N;
    out.m = m;
    out.W = W;
    out.sigma = (2.0 * m + N + 3.0) / (N + 2.0);
    out.rho = ((2.0 * m + 1.0) * b + 2.0 * a) / ((N + 2.0) * b);
    return true;
  }

  // polynomial-denominator case (no 1/x pole in lambda0): the canonical
  // shape requires the -(m+1)/x term, so this cannot match.
  return false;
}

}  // namespace mrbound
