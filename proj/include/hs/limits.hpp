#ifndef HS_LIMITS_HPP
#define HS_LIMITS_HPP

#include "hs/funcspace.hpp"
#include "hs/quadrature.hpp"
#include "hs/transforms.hpp"

#include <vector>

namespace hs {

/// c(m) = C_{m,p,0} (omega_{N-1}/omega_{m-1})^{p/m} ((N-p)/(m-p))^{p - p/m},
/// computed entirely in log space; c(m) -> ((N-p)/p)^p as m -> infinity.
/// m is a real parameter > max(N, p); integer m recovers the transform
/// interpretation.
double c_of_m(double m, int N, double p);

struct LimitCurve {
  std::vector<double> m;
  std::vector<double> value;
  double target = 0.0;
  std::vector<double> gap;  // |value - target| / target
};

/// c(m) along an m-grid against the Hardy constant ((N-p)/p)^p.
LimitCurve dimension_limit_curve(const std::vector<double>& m_grid, int N, double p);

/// The weighted-norm side of the dimension-limit inequality,
///   L(m) = c(m) (int_{R^N} |w|^{mp/(m-p)} |y|^{-(m-N)p/(m-p)} dy)^{(m-p)/m},
/// against its limit ((N-p)/p)^p int |w|^p |y|^{-p} dy.
LimitCurve weighted_limit_check(const RadialFunction& w,
                                const std::vector<double>& m_grid, int N, double p,
                                const QuadratureSpec& spec = {});

struct DimIdentityReport {
  ResidualReport gradient;
  ResidualReport weight;
};

/// Both norm identities of the dimension-reduction map for radial w on
/// R^N, transported to dimension m.
DimIdentityReport verify_S_another(int m, int N, double p, const RadialFunction& w,
                                   const QuadratureSpec& spec = {});

} // namespace hs

#endif
