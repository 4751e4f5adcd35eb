#ifndef HS_MINIMIZE_HPP
#define HS_MINIMIZE_HPP

#include "hs/funcspace.hpp"
#include "hs/functionals.hpp"
#include "hs/params.hpp"

#include <Eigen/Core>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace hs {

/// Piecewise-linear discretization of the weighted quotient on a graded
/// mesh 0 = x_0 < x_1 < ... < x_M = R with zero trace at R. Degrees of
/// freedom are u_0..u_{M-1}; the weighted norm is integrated cellwise by
/// a fixed Gauss-Legendre rule against precomputed potential weights.
class DiscreteQuotient {
 public:
  DiscreteQuotient(const ProblemParams& q, int cells = 2000, double grading = 3.0,
                   int cell_rule = 6);

  double energy(const Eigen::VectorXd& u) const;
  double weighted(const Eigen::VectorXd& u) const;
  double quotient(const Eigen::VectorXd& u) const;
  /// Euclidean gradient of quotient() with respect to the DOF vector.
  Eigen::VectorXd gradient(const Eigen::VectorXd& u) const;
  /// Sobolev-preconditioned descent direction: the gradient solved
  /// against the tridiagonal weighted p-stiffness matrix linearized at u.
  Eigen::VectorXd descent_direction(const Eigen::VectorXd& u) const;
  /// Rescale so the weighted norm integral equals 1.
  Eigen::VectorXd normalize(const Eigen::VectorXd& u) const;
  /// Sample a profile at the mesh points (zero at R).
  Eigen::VectorXd sample(const RadialFunction& u) const;
  /// Interpolant through the DOFs (monotone cubic, zero beyond R).
  GridFunction interpolant(const Eigen::VectorXd& u) const;

  const Eigen::VectorXd& points() const { return x_; }
  int dof() const { return static_cast<int>(x_.size()) - 1; }
  double grading() const { return grading_; }

 private:
  ProblemParams q_;
  double grading_;
  Eigen::VectorXd x_;          // M+1 mesh points
  Eigen::VectorXd cell_e_;     // omega (x_{i+1}^N - x_i^N)/N per cell
  Eigen::MatrixXd wq_, tq_;    // per-cell quadrature weights / barycentric
};

struct MinimizeResult {
  double quotient = 0.0;       // certified value (full-quadrature re-evaluation)
  double error = 0.0;
  bool certified = false;
  std::vector<double> trace;   // discrete quotient per accepted step
  std::vector<std::string> witness_names;
  std::vector<double> witness; // family parameters of the best trial
  GridFunction minimizer;      // gradient-flow result (empty for searches)
  long evaluations = 0;
};

void to_json(nlohmann::json& j, const MinimizeResult& r);

struct FlowOptions {
  int cells = 2000;
  double grading = 3.0;
  int max_steps = 5000;
  double initial_step = 0.1;
  double rel_tol = 1e-8;
};

/// Normalized gradient flow of the radial quotient: Sobolev-gradient
/// descent with backtracking (each accepted step decreases the discrete
/// quotient), renormalizing the weighted norm after every step. The
/// returned quotient re-evaluates the interpolated minimizer through the
/// adaptive functionals, so it is a genuine upper bound on the radial
/// infimum.
MinimizeResult minimize_radial(const ProblemParams& q, const RadialFunction& start,
                               const FlowOptions& opt = {});
/// Default start (1 - (r/R)^2), deliberately away from any known minimizer.
MinimizeResult minimize_radial(const ProblemParams& q, const FlowOptions& opt = {});

/// Radial trial profiles used by the searches and the CLI.
/// truncated_power: r^{-(N-p)/p + delta} - R^{...} on B_R (Hardy regime).
RadialFunction truncated_power(double delta, const ProblemParams& q);
/// truncated_bubble: the whole-space extremal at scale 1/mu, cut at R.
RadialFunction truncated_bubble(double mu, const ProblemParams& q);

enum class TrialFamily { bump_cone, bump_smooth, bump_bubble, radial_power, radial_bubble };

/// Quotient of one off-center bump trial: profile scaled to the ball of
/// radius eps centered at distance rho from the origin. The numerator is
/// the exact scaling eps^{N-p} E_profile; the denominator integrates the
/// potential over the bump in local spherical coordinates. mu is the
/// bubble-profile shape parameter (ignored for cone/smooth).
QuotientReport bump_trial_quotient(const ProblemParams& q, TrialFamily family,
                                   double rho, double eps, double mu = 1.0,
                                   const QuadratureSpec& spec = {});

/// Derivative-free search (deterministic coarse starts + Nelder-Mead
/// refinement) over the family parameters. Every reported minimum is an
/// evaluated quotient of an explicit admissible function.
MinimizeResult best_trial_quotient(const ProblemParams& q, TrialFamily family,
                                   int budget = 4000);

struct AStarReport {
  double a_hat = std::numeric_limits<double>::quiet_NaN();  // NaN: no witness
  double radial_level = 0.0;   // the radial infimum C_{N,p,s}
  std::vector<double> a_grid;
  std::vector<double> best;    // best trial quotient per grid point
  MinimizeResult witness;      // the witness at a_hat (if any)
};

/// Ascending scan: the smallest grid value whose best trial quotient
/// drops below radial_level - margin, certifying an upper bound for the
/// symmetry-breaking threshold.
AStarReport estimate_a_star_upper(const ProblemParams& q,
                                  const std::vector<double>& a_grid, double margin,
                                  TrialFamily family = TrialFamily::bump_cone,
                                  int budget = 2000);

struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::vector<double> eps;
  std::vector<double> quotient;
};

/// Least-squares slope of log Q_1(u_eps) against log eps for the
/// boundary-bump family (requires a = 1); a positive slope certifies
/// that the infimum vanishes.
DecayFit decay_fit(const ProblemParams& q, const std::vector<double>& eps_grid,
                   const QuadratureSpec& spec = {});

struct MonotonicityReport {
  std::vector<double> a_grid;
  std::vector<std::vector<double>> quotients;  // [function][a]
  bool all_nonincreasing = false;
};

/// Q_a(u) along an a-grid for each function of the suite; the potential
/// grows pointwise with a, so every row must be non-increasing.
MonotonicityReport monotonicity_scan(const std::vector<AxisymFunction>& suite,
                                     const ProblemParams& base,
                                     const std::vector<double>& a_grid,
                                     const QuadratureSpec& spec = {});

} // namespace hs

#endif
