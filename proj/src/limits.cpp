#include "hs/limits.hpp"

#include "hs/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hs {

double c_of_m(double m, int N, double p) {
  if (!(p > 1.0 && p < N && N < m))
    throw std::domain_error("c_of_m: p < N < m required");
  double pi = std::acos(-1.0);
  double log_sob = 0.5 * p * std::log(pi) + std::log(m) +
                   (p - 1.0) * std::log((m - p) / (p - 1.0)) +
                   (p / m) * (log_gamma(m / p) + log_gamma(m + 1.0 - m / p) -
                              log_gamma(m) - log_gamma(1.0 + 0.5 * m));
  double log_c = log_sob +
                 (p / m) * (log_sphere_area(static_cast<double>(N)) -
                            log_sphere_area(m)) +
                 (p - p / m) * std::log((N - p) / (m - p));
  return std::exp(log_c);
}

LimitCurve dimension_limit_curve(const std::vector<double>& m_grid, int N, double p) {
  LimitCurve c;
  c.m = m_grid;
  c.target = std::pow((N - p) / p, p);
  for (double m : m_grid) {
    double v = c_of_m(m, N, p);
    c.value.push_back(v);
    c.gap.push_back(std::abs(v - c.target) / c.target);
  }
  return c;
}

LimitCurve weighted_limit_check(const RadialFunction& w,
                                const std::vector<double>& m_grid, int N, double p,
                                const QuadratureSpec& spec) {
  double om = sphere_area(static_cast<double>(N));
  // limit side: ((N-p)/p)^p int |w|^p |y|^{-p} dy
  QuadratureSpec hs_spec = spec;
  hs_spec.resolve_left(std::max(0.0, p - (N - 1.0) - p * w.origin_exponent));
  auto fh = [&w, N, p](double t) {
    double wv = w.value(t);
    if (wv == 0.0) return 0.0;
    return std::pow(std::abs(wv), p) * std::pow(t, N - 1.0 - p);
  };
  double hardy_side =
      std::isinf(w.support_radius)
          ? integrate_tail(fh, hs_spec).value
          : integrate_radial(fh, 0.0, w.support_radius, hs_spec).value;

  LimitCurve c;
  c.m = m_grid;
  c.target = std::pow((N - p) / p, p) * om * hardy_side;
  for (double m : m_grid) {
    double q = m * p / (m - p);
    double sw = (m - N) * p / (m - p);
    QuadratureSpec sp = spec;
    sp.resolve_left(std::max(0.0, sw - (N - 1.0) - q * w.origin_exponent));
    auto f = [&w, q, sw, N](double t) {
      double wv = w.value(t);
      if (wv == 0.0) return 0.0;
      return std::pow(std::abs(wv), q) * std::pow(t, N - 1.0 - sw);
    };
    double integral = std::isinf(w.support_radius)
                          ? integrate_tail(f, sp).value
                          : integrate_radial(f, 0.0, w.support_radius, sp).value;
    double L = c_of_m(m, N, p) * std::pow(om * integral, (m - p) / m);
    c.value.push_back(L);
    c.gap.push_back(std::abs(L - c.target) / c.target);
  }
  return c;
}

DimIdentityReport verify_S_another(int m, int N, double p, const RadialFunction& w,
                                   const QuadratureSpec& spec) {
  TransformMap map = make_dim(N, m, p);
  DimIdentityReport rep;
  rep.gradient = verify_norm_identity(map, w, IdentitySelector::gradient, 0.0, 0.0, spec);
  rep.weight = verify_norm_identity(map, w, IdentitySelector::weight, 0.0, 0.0, spec);
  return rep;
}

} // namespace hs
