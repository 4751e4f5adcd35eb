#ifndef HS_SPECIAL_HPP
#define HS_SPECIAL_HPP

#include <cmath>

// Log-space special functions. Everything that can overflow for large
// arguments (sphere areas, Sobolev constants at dimension ~10^6) goes
// through log_gamma and exponentiation of differences.

namespace hs {

/// log Gamma(x), x > 0.
inline double log_gamma(double x) { return std::lgamma(x); }

/// log of the surface area of the unit sphere S^{n-1} in R^n, n real > 0.
/// omega_{n-1} = 2 pi^{n/2} / Gamma(n/2).
double log_sphere_area(double n);

/// omega_{n-1}, finite for moderate n (throws no overflow up to n ~ 340).
double sphere_area(double n);

/// Euler Beta function B(a,b), a,b > 0, via log-gamma.
double beta_function(double a, double b);

/// Gamma(t) / (sqrt(2 pi) t^{t-1/2} e^{-t}): approaches 1 as t -> infinity.
double stirling_ratio(double t);

} // namespace hs

#endif
