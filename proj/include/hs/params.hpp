#ifndef HS_PARAMS_HPP
#define HS_PARAMS_HPP

#include <limits>

namespace hs {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Parameters of the weighted minimization problem on the ball B_R:
/// dimension N, exponent p, weight exponent s, radius R, potential
/// strength a, and the outer radius T of the transformed problem
/// (T = infinity permitted).
struct ProblemParams {
  int N = 3;
  double p = 2.0;
  double s = 1.0;
  double R = 1.0;
  double a = 0.0;
  double T = kInfinity;
};

/// Validates 1 < p < N (N >= 2), 0 <= s <= p, 0 <= a <= 1, R > 0, T >= R.
/// Throws std::invalid_argument naming the violated constraint.
ProblemParams validate(const ProblemParams& raw);

/// beta(s) = ((N-1)p - (p-1)s) / (N-p).
double beta(const ProblemParams& q);

/// p*(s) = p (N-s) / (N-p).
double p_star(const ProblemParams& q);

/// ((N-p)/p)^p, the best constant of the Hardy case s = p.
double hardy_constant(const ProblemParams& q);

/// s(p-1) / (p(N-1)); below this value of a the potential is radially
/// decreasing and the rearrangement argument applies.
double rearrange_threshold(const ProblemParams& q);

/// Best constant of the Sobolev inequality on R^m (s = 0), 1 < p < m.
/// Evaluated in log space so it stays finite for m up to ~10^6.
double sobolev_constant(double m, double p);

/// Best Hardy-Sobolev constant C_{N,p,s}. Closed form ((N-p)/p)^p at
/// s = p; otherwise the Rayleigh quotient of the extremal profile W_1
/// on R^N computed by radial quadrature.
double hardy_sobolev_constant(const ProblemParams& q);

/// The threshold A = 1 - th^{s/beta} (1 - th), th = s(p-1)/(p(N-1)),
/// defined for 0 < s < p. Cross-checked against the root of
/// V_A(R) = V_1(R_a|_{a=1}); disagreement beyond 1e-9 throws.
double threshold_A(const ProblemParams& q);

/// R_a = (s(p-1) / (a p(N-1)))^{(p-1)/(N-p)} R, the unique interior
/// critical point of the potential. Requires a > 0 and 0 < s <= p.
double critical_radius(const ProblemParams& q);

/// All closed-form constants bundled for reporting.
struct DerivedConstants {
  double beta;
  double p_star;
  double hardy_const;
  double rearrange_threshold;
  double A;                 // NaN outside 0 < s < p
  double R_a;               // NaN when a == 0 or s == 0
  double omega;             // omega_{N-1}
};

DerivedConstants derive(const ProblemParams& q);

} // namespace hs

#endif
