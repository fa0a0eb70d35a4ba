#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "mrbound/closedform.hpp"
#include "mrbound/potentials.hpp"

namespace mrbound {

// Dense univariate polynomial, ascending coefficients. c empty means zero.
struct Poly {
  std::vector<double> c;

  Poly() = default;
  Poly(std::initializer_list<double> coeffs) : c(coeffs) { trim(); }
  explicit Poly(std::vector<double> coeffs) : c(std::move(coeffs)) { trim(); }

  void trim();
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  double eval(double x) const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(double k, const Poly& p);
};

// Polynomial in x whose coefficients are polynomials in the spectral
// parameter eps. Supports the exact operations the iteration needs.
struct Poly2 {
  std::vector<Poly> cx;  // cx[i] multiplies x^i

  Poly2() = default;
  static Poly2 constant(double v);
  static Poly2 from_x(std::vector<double> coeffs);  // numeric x-polynomial
  static Poly2 eps_linear(double c0, double c1);    // c0 + c1*eps (x-degree 0)

  void trim();
  bool is_zero() const { return cx.empty(); }
  int xdegree() const { return static_cast<int>(cx.size()) - 1; }
  double eval(double x, double eps) const;
  Poly bind(double eps) const;  // x-polynomial at fixed eps
  Poly2 dx() const;             // exact d/dx

  friend Poly2 operator+(const Poly2& a, const Poly2& b);
  friend Poly2 operator-(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
};

// Rational function num/den in x; coefficients may carry eps.
// Differentiation is exact via the quotient rule.
struct SymbolicRational {
  Poly2 num;
  Poly2 den;  // must not be identically zero

  SymbolicRational() { den = Poly2::constant(1.0); }
  SymbolicRational(Poly2 n, Poly2 d);

  double eval(double x, double eps) const;
  SymbolicRational dx() const;

  friend SymbolicRational operator+(const SymbolicRational& a,
                                    const SymbolicRational& b);
  friend SymbolicRational operator*(const SymbolicRational& a,
                                    const SymbolicRational& b);
};

struct CoefficientPair {
  SymbolicRational lambda;
  SymbolicRational s;
  int k = 0;
};

struct AimConfig {
  int max_k = 12;                  // >= 2
  double x0 = 0.0;                 // evaluation point
  double tol = 1e-12;              // consecutive-root agreement tolerance
  double bracket_lo = 0.0;         // eps search interval
  double bracket_hi = 0.0;
  int bracket_subdivisions = 512;  // sign-change scan resolution
};

struct AimRoot {
  double eps = 0.0;
  int k_used = 0;
  double residual = 0.0;  // scaled quantization determinant at the root
};

// Thrown when no root stabilizes by max_k.
struct AimConvergenceError : std::runtime_error {
  int best_k;
  double best_residual;
  AimConvergenceError(int k, double res)
      : std::runtime_error("no eigenvalue stabilized by max_k"),
        best_k(k),
        best_residual(res) {}
};

// Thrown when the quantization determinant vanishes identically (s0 == 0).
struct AimDegenerateError : std::runtime_error {
  AimDegenerateError() : std::runtime_error("identically zero determinant") {}
};

// One step of the coefficient recurrence:
//   lambda_k = lambda'_{k-1} + s_{k-1} + lambda_0 lambda_{k-1}
//   s_k      = s'_{k-1} + s_0 lambda_{k-1}
// pair0 supplies (lambda_0, s_0); pair is the level to advance.
CoefficientPair iterate(const CoefficientPair& pair, const CoefficientPair& pair0);
inline CoefficientPair iterate(const CoefficientPair& pair0) {
  return iterate(pair0, pair0);
}

// delta_k(x0) = lambda_k s_{k-1} - lambda_{k-1} s_k at spectral parameter eps.
double quantization_delta(const CoefficientPair& pair_k,
                          const CoefficientPair& pair_km1, double x0, double eps);

// Same determinant computed from a level-0 pair by the rescaled numeric
// recurrence the eigenvalue search uses. The result carries a positive,
// level-dependent scale factor: its zeros and signs are meaningful, its
// magnitude only relative to nearby eps. Far better conditioned than
// evaluating high-degree symbolic levels.
double quantization_delta_scaled(const CoefficientPair& pair0, int k, double x0,
                                 double eps);

// Eigenvalue search on a level-0 pair. A root is accepted once estimates at
// two consecutive k agree within tol. Roots are returned ascending.
std::vector<AimRoot> solve_eigenvalues(const CoefficientPair& pair0,
                                       const AimConfig& config);

// Level-0 pair whose coefficients depend on the spectral parameter in a
// non-polynomial way (the energy enters through square roots). build(E)
// returns the numeric pair at that energy.
struct ParametricPair {
  std::function<CoefficientPair(double)> build;
  double default_x0 = 0.0;
};

std::vector<AimRoot> solve_eigenvalues(const ParametricPair& pair,
                                       const AimConfig& config);

// Reduction of the approximated radial problem to a level-0 pair in the
// variable z = (e^{-r/b} - 1)^{-1}, z < -1 on the physical domain:
//   lambda_0 = (2 beta - 1)/(1 + z) - (2 gamma + 1)/z
//   s_0      = -[lambda_a + (gamma-beta)^2 + (gamma-beta)]/(z(1+z))
// with gamma = -sqrt(T - eps~), beta = -sqrt(C - eps~) (decaying branches;
// the positive branches admit no quantization root) and the dynamical
// lambda_a = -(alpha(alpha-1) + l(l+1)).
ParametricPair mr_to_aim(const PotentialParams& params, int ell,
                         CentrifugalScheme scheme, const PhysicalConstants& consts);

// Pair built directly from (gamma, beta, lambda_a); used to probe the
// root-sequence pattern gamma - beta = -(2k+1)/2 - sqrt(1 - 4 lambda_a)/2.
CoefficientPair pair_from_gamma_beta(double gamma, double beta, double lambda_a);

// Canonical exactly-solvable shape
//   lambda_0 = 2 ( a x^{N+1} / (1 - b x^{N+2}) - (m+1)/x )
//   s_0      = -W x^N / (1 - b x^{N+2})
struct SolvableForm {
  double a = 0.0;
  double b_coef = 0.0;
  double N = 0.0;
  double m = 0.0;
  double W = 0.0;
  double sigma = 0.0;  // (2m + N + 3)/(N + 2)
  double rho = 0.0;    // ((2m+1) b + 2a)/((N+2) b)
};

// Pattern-match a numeric level-0 pair against the solvable shape.
// Returns false (no-match) if the structure does not fit; that is a normal
// result, not an error.
bool match_solvable_form(const CoefficientPair& pair0, double eps,
                         SolvableForm& out);

}  // namespace mrbound
