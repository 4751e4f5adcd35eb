#ifndef HS_TRANSFORMS_HPP
#define HS_TRANSFORMS_HPP

#include "hs/funcspace.hpp"
#include "hs/params.hpp"
#include "hs/quadrature.hpp"

namespace hs {

/// The four radial change-of-variable maps. `forward` sends the radius
/// of the first-listed domain to the second:
///   ioku: B_R -> B_T,   r^{-alpha} - R^{-alpha} = t^{-alpha} - T^{-alpha},
///         alpha = (N-p)/(p-1), T = infinity handled in closed form
///   hk:   B_R -> R^N,   t^{-alpha} = log(R/r)
///   st:   B_R^N -> R^m, t^{-(m-N)/(N-1)} = log(R/r), fixed p = N
///   dim:  R^m -> R^N,   t^{-(N-p)/(p-1)} = r^{-(m-p)/(p-1)}
enum class MapKind { ioku, hk, st, dim };

struct TransformMap {
  MapKind kind;
  int N = 3;
  double p = 2.0;
  double R = 1.0;
  double T = kInfinity;  // ioku only
  int m = 0;             // st / dim only

  double forward(double r) const;
  double inverse(double t) const;
  /// dr/dt evaluated at r (the inner-domain radius).
  double jacobian(double r) const;

  /// Upper limit of the forward variable (T, or infinity).
  double outer_limit() const;
};

TransformMap make_ioku(int N, double p, double R, double T);
TransformMap make_hk(int N, double p, double R);
TransformMap make_st(int N, int m, double R);
TransformMap make_dim(int N, int m, double p);

/// gamma(alpha) = ((m-1)N - (N-1)alpha) / (m-N), the ST weight exponent.
double st_weight_exponent(const TransformMap& map, double alpha);

/// u(r) = w(t(r)): transport a function on the forward domain back to the
/// inner domain (derivative via the jacobian), and the reverse direction.
RadialFunction pushforward(const TransformMap& map, const RadialFunction& w);
RadialFunction pullback(const TransformMap& map, const RadialFunction& u);

enum class IdentitySelector { gradient, weight };

struct ResidualReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;  // |lhs-rhs| / max(|lhs|,|rhs|), 0 when both vanish
};

/// Checks the selected printed norm identity for the map, both sides by
/// independent quadrature (different gradings and rule orders). The test
/// function lives on the B_R side for ioku/hk/st and on the R^N side for
/// dim; it must be radial with zero trace. `s` is the weight exponent of
/// the weight identity (ignored for gradient); `q` the integrand power
/// (defaults to the map's critical exponent).
ResidualReport verify_norm_identity(const TransformMap& map,
                                    const RadialFunction& testfn,
                                    IdentitySelector selector, double s = 0.0,
                                    double q = 0.0,
                                    const QuadratureSpec& spec = {});

/// int_{B_R} |L_p u|^p dx for axisymmetric u, where L_p carries the
/// angular factor [1 - a (r/R)^{(N-p)/(p-1)}]^{-1}. Radial u reduces to
/// the p-Dirichlet energy.
double lp_operator_energy(const AxisymFunction& u, const ProblemParams& q,
                          const QuadratureSpec& spec = {});

} // namespace hs

#endif
