#ifndef HS_FUNCSPACE_HPP
#define HS_FUNCSPACE_HPP

#include "hs/params.hpp"
#include "hs/quadrature.hpp"

#include <Eigen/Core>
#include <functional>
#include <string>

namespace hs {

/// An evaluable radial profile with one derivative. The exponent hints
/// describe the leading behavior u ~ r^{origin_exponent} near 0 and
/// u ~ (support_radius - r)^{boundary_exponent} near the edge of its
/// support; the weighted functionals use them to pick quadrature
/// gradings for singular weights.
struct RadialFunction {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
  double support_radius = kInfinity;  // u == 0 beyond this radius
  double origin_exponent = 0.0;
  double boundary_exponent = 1.0;

  double operator()(double r) const { return value(r); }
};

/// Axisymmetric u(r, theta) with partial derivatives. theta is the polar
/// angle; smoothness across the axis means dtheta -> 0 at theta in {0, pi}.
struct AxisymFunction {
  std::function<double(double, double)> value;
  std::function<double(double, double)> dr;
  std::function<double(double, double)> dtheta;
  double support_radius = kInfinity;
};

/// The extremal profile of the whole-space Hardy-Sobolev quotient,
/// W_lambda(t) = lambda^{(N-p)/p} (1 + (lambda t)^{(p-s)/(p-1)})^{-(N-p)/(p-s)}.
/// Requires 0 <= s < p (the family degenerates at s = p).
double eval_W(double lambda, double t, const ProblemParams& q);
double eval_W_deriv(double lambda, double t, const ProblemParams& q);
RadialFunction make_W(double lambda, const ProblemParams& q);

/// The ball extremal U^lambda(r) (the minimizer family at a = 1),
/// defined for r in [0, R); U^lambda -> 0 as r -> R. Throws for r >= R.
double eval_U(double lambda, double r, const ProblemParams& q);
double eval_U_deriv(double lambda, double r, const ProblemParams& q);
RadialFunction make_U(double lambda, const ProblemParams& q);

enum class BumpProfile { cone, smooth };

/// Radius of the bump center x_eps = (R - 2 eps) * axis direction.
double bump_center(double eps, const ProblemParams& q);

/// The boundary-bump trial u_eps supported in B_eps(x_eps), axis along
/// theta = 0. The cone profile is v = 1 on [0,1/2], 2(1-t) on (1/2,1];
/// the smooth profile is a C^1 quadratic blend. Requires 0 < eps < R/4.
AxisymFunction boundary_bump(double eps, BumpProfile profile, const ProblemParams& q);

/// Profile energy E_v = int_{B_1} |grad v|^p dz, so that the bump's
/// p-Dirichlet energy equals eps^{N-p} E_v exactly.
double bump_profile_energy(BumpProfile profile, int N, double p,
                           const QuadratureSpec& spec = {});

/// Spherical q-averaging of Lemma-3.1 type:
///   W(r) = (omega_{N-1}^{-1} int_{S^{N-1}} |w(r omega)|^q dS)^{1/q},
/// with W'(r) from the differentiated formula. Both evaluated by
/// adaptive angular quadrature on demand.
RadialFunction spherical_average(const AxisymFunction& w, double q, int N,
                                 const QuadratureSpec& spec = {});

/// Wrap a radial profile as an axisymmetric function (dtheta == 0).
AxisymFunction as_axisym(const RadialFunction& u);

/// Samples on a strictly increasing grid with monotone piecewise-cubic
/// (Fritsch-Carlson) interpolation; derivative from the interpolant.
class GridFunction {
 public:
  GridFunction() = default;
  /// nodes strictly increasing, first node > 0; values at nodes.
  GridFunction(Eigen::VectorXd nodes, Eigen::VectorXd values, double grading = 1.0);

  double value(double r) const;
  double deriv(double r) const;

  const Eigen::VectorXd& nodes() const { return nodes_; }
  const Eigen::VectorXd& values() const { return values_; }
  double grading() const { return grading_; }

  /// Zero-trace view: value/deriv extended by 0 beyond the last node.
  RadialFunction as_radial() const;

  /// Two-column CSV (node,value); a leading comment line records the
  /// mesh grading.
  void save_csv(const std::string& path) const;
  static GridFunction load_csv(const std::string& path);

 private:
  void build_slopes();
  Eigen::VectorXd nodes_, values_, slopes_;
  double grading_ = 1.0;
};

/// Graded nodes on (0, R]: n interior nodes clustered at both endpoints
/// with the given grading exponent, last node exactly R.
Eigen::VectorXd graded_nodes(int n, double R, double grading);

} // namespace hs

#endif
