#ifndef HS_QUADRATURE_HPP
#define HS_QUADRATURE_HPP

#include <Eigen/Core>
#include <functional>

namespace hs {

/// Deterministic integration on an interval with algebraic endpoint
/// singularities. Each half of the interval is mapped by the power
/// substitution r = endpoint +/- h * xi^grade, which turns an integrable
/// singularity r^{-sigma} into xi^{grade(1-sigma)-1}; composite
/// Gauss-Legendre in xi with panel doubling then converges at the usual
/// rate. All nodes are interior (open rule): singular integrands are
/// never evaluated at endpoints.
struct QuadratureSpec {
  double rel_tol = 1e-9;
  int max_panels = 4096;     // per half-interval
  double grade_left = 3.0;   // >= 1
  double grade_right = 3.0;  // >= 1
  int rule_order = 12;       // Gauss-Legendre points per panel
  // Declared singularity strengths (set by resolve_*). Near a nonzero
  // endpoint the distance to it underflows in the argument itself; nodes
  // inside that rounding shadow are evaluated at a safe reference
  // distance and extrapolated with the algebraic model d^{-sigma}.
  double sigma_left = 0.0;
  double sigma_right = 0.0;

  /// Raise the left grading to resolve an integrand ~ r^{-sigma}, sigma in (0,1).
  QuadratureSpec& resolve_left(double sigma);
  QuadratureSpec& resolve_right(double sigma);
};

struct IntegralResult {
  double value = 0.0;
  double error = 0.0;  // estimate: difference of the last two refinements
  int panels = 0;      // per half at termination
  bool converged = false;
};

/// Gauss-Legendre nodes and weights on [-1,1] (Newton iteration, cached).
void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights);

using Integrand1D = std::function<double(double)>;
using Integrand2D = std::function<double(double, double)>;

/// integral of f over (a,b). Throws on non-convergence only if
/// spec.rel_tol could not be met AND the returned error estimate is
/// meaningless (NaN); otherwise reports converged = false.
IntegralResult integrate_radial(const Integrand1D& f, double a, double b,
                                const QuadratureSpec& spec = {});

/// integral of f over (0,infinity) via t = u/(1-u). Throws
/// std::runtime_error on detected non-decay.
IntegralResult integrate_tail(const Integrand1D& f, const QuadratureSpec& spec = {});

/// integral of h(theta) sin^{N-2}(theta) over (0,pi).
IntegralResult integrate_angular(const Integrand1D& h, int N,
                                 const QuadratureSpec& spec = {});

/// Full axisymmetric integral over the ball shell r in (r0, r1):
///   omega_{N-2} * int int g(r,theta) sin^{N-2}(theta) r^{N-1} dtheta dr.
/// For theta-independent g this reduces to omega_{N-1} * radial integral.
IntegralResult integrate_axisym(const Integrand2D& g, int N, double r0, double r1,
                                const QuadratureSpec& spec = {});

} // namespace hs

#endif
