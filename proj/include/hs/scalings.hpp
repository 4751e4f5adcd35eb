#ifndef HS_SCALINGS_HPP
#define HS_SCALINGS_HPP

#include "hs/funcspace.hpp"
#include "hs/params.hpp"
#include "hs/quadrature.hpp"

#include <vector>

namespace hs {

/// usual:  u_l(x) = l^{(N-p)/p} u(l x)
/// radial_map ("new"): u^l(r w) = l^{(N-p)/p} u(rtilde(r) w) on B_R,
///   rtilde = l r [1 + a(l^alpha - 1)(r/R)^alpha]^{-1/alpha},
///   support shrinks to Rtilde = R (l^alpha (1-a) + a)^{-1/alpha}
/// scale_n: v_l(x) = l^{-(N-1)/N} v((|x|/b)^{l-1} x),   b >= 1, l <= 1
/// scale_p: w_l(x) = l^{(N-p)/p} w(l [1 + a(l^alpha-1)|x|^alpha]^{-1/alpha} x),
///   on B_1, l >= 1
enum class ScalingKind { usual, radial_map, scale_n, scale_p };

struct ScalingSpec {
  ScalingKind kind = ScalingKind::usual;
  double lambda = 1.0;
  double a = 0.0;  // radial_map / scale_p
  double b = 1.0;  // scale_n
};

/// Enforces the admissible lambda range: lambda >= 1 for radial_map and
/// scale_p unless a = 1; lambda <= 1 for scale_n unless b = 1; lambda > 0
/// always. Throws std::domain_error.
void validate_scaling(const ScalingSpec& spec, const ProblemParams& q);

/// The shrunken support radius Rtilde of the radial_map scaling.
double scaled_support_radius(const ScalingSpec& spec, const ProblemParams& q);

RadialFunction apply_scaling(const ScalingSpec& spec, const RadialFunction& u,
                             const ProblemParams& q);
AxisymFunction apply_scaling(const ScalingSpec& spec, const AxisymFunction& u,
                             const ProblemParams& q);

struct CurvePoint {
  double lambda = 0.0;
  double energy = 0.0;
  double error = 0.0;
};

/// max over a probe grid of |u_theta|; used to refuse divergence
/// certificates for functions without angular content.
double angular_content(const AxisymFunction& u, const ProblemParams& q);

/// Energy along a lambda grid. For scale_n and scale_p the transformed
/// 1D-in-t integral from the change of variables is evaluated directly
/// (L^N resp. L^p energy); lambda = infinity is admitted for scale_p and
/// evaluates the limit integrand. For usual/radial_map the energy of the
/// scaled function itself is integrated.
std::vector<CurvePoint> scaled_energy_curve(ScalingKind kind,
                                            const AxisymFunction& u,
                                            const std::vector<double>& lambdas,
                                            const ProblemParams& q,
                                            const QuadratureSpec& spec = {});

} // namespace hs

#endif
