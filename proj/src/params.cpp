#include "hs/params.hpp"

#include "hs/funcspace.hpp"
#include "hs/quadrature.hpp"
#include "hs/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hs {

ProblemParams validate(const ProblemParams& raw) {
  if (raw.N < 2) throw std::invalid_argument("N >= 2 violated");
  if (!(raw.p > 1.0)) throw std::invalid_argument("p > 1 violated");
  if (!(raw.p < raw.N)) throw std::invalid_argument("p < N violated");
  if (!(raw.s >= 0.0)) throw std::invalid_argument("s >= 0 violated");
  if (!(raw.s <= raw.p)) throw std::invalid_argument("s <= p violated");
  if (!(raw.R > 0.0)) throw std::invalid_argument("R > 0 violated");
  if (!(raw.a >= 0.0 && raw.a <= 1.0)) throw std::invalid_argument("a in [0,1] violated");
  if (!(raw.T >= raw.R)) throw std::invalid_argument("T >= R violated");
  return raw;
}

double beta(const ProblemParams& q) {
  return ((q.N - 1.0) * q.p - (q.p - 1.0) * q.s) / (q.N - q.p);
}

double p_star(const ProblemParams& q) { return q.p * (q.N - q.s) / (q.N - q.p); }

double hardy_constant(const ProblemParams& q) {
  return std::pow((q.N - q.p) / q.p, q.p);
}

double rearrange_threshold(const ProblemParams& q) {
  return q.s * (q.p - 1.0) / (q.p * (q.N - 1.0));
}

double sobolev_constant(double m, double p) {
  if (!(p > 1.0 && p < m)) throw std::domain_error("sobolev_constant: 1 < p < m required");
  double log_gamma_term = log_gamma(m / p) + log_gamma(m + 1.0 - m / p) -
                          log_gamma(m) - log_gamma(1.0 + 0.5 * m);
  double log_c = 0.5 * p * std::log(std::acos(-1.0)) + std::log(m) +
                 (p - 1.0) * std::log((m - p) / (p - 1.0)) + (p / m) * log_gamma_term;
  return std::exp(log_c);
}

double hardy_sobolev_constant(const ProblemParams& q0) {
  ProblemParams q = validate(q0);
  if (q.s == q.p) return hardy_constant(q);
  // Rayleigh quotient of W_1 over R^N.
  RadialFunction w = make_W(1.0, q);
  double om = sphere_area(static_cast<double>(q.N));
  double ps = p_star(q);
  QuadratureSpec spec;
  spec.rel_tol = 1e-11;
  double kappa = (q.p - q.s) / (q.p - 1.0);
  // |W'|^p ~ t^{(kappa-1)p} at the origin
  double sig_num = std::max(0.0, (1.0 - kappa) * q.p - (q.N - 1.0));
  QuadratureSpec num_spec = spec;
  num_spec.resolve_left(sig_num);
  auto fnum = [&w, &q](double t) {
    return std::pow(std::abs(w.deriv(t)), q.p) * std::pow(t, q.N - 1.0);
  };
  IntegralResult num = integrate_tail(fnum, num_spec);
  QuadratureSpec den_spec = spec;
  den_spec.resolve_left(std::max(0.0, q.s - (q.N - 1.0)));
  auto fden = [&w, &q, ps](double t) {
    return std::pow(std::abs(w.value(t)), ps) * std::pow(t, q.N - 1.0 - q.s);
  };
  IntegralResult den = integrate_tail(fden, den_spec);
  if (!num.converged || !den.converged)
    throw std::runtime_error("hardy_sobolev_constant: quadrature did not converge");
  return om * num.value / std::pow(om * den.value, q.p / ps);
}

double threshold_A(const ProblemParams& q) {
  if (!(q.s > 0.0 && q.s < q.p))
    throw std::domain_error("threshold_A: defined for 0 < s < p only");
  double th = rearrange_threshold(q);
  double b = beta(q);
  double printed = 1.0 - std::pow(th, q.s / b) * (1.0 - th);
  // Independent route: A solves V_A(R) = V_1(R_1), i.e.
  // (1-A)^{-beta} = th^{-s} (1-th)^{-beta}. Bisection on the log form.
  double target = -q.s * std::log(th) - b * std::log(1.0 - th);
  auto f = [b, target](double A) { return -b * std::log1p(-A) - target; };
  double lo = 0.0, hi = 1.0 - 1e-16;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  double rooted = 0.5 * (lo + hi);
  if (std::abs(rooted - printed) > 1e-9)
    throw std::runtime_error("threshold_A: formula and root disagree beyond 1e-9");
  return printed;
}

double critical_radius(const ProblemParams& q) {
  if (!(q.a > 0.0)) throw std::domain_error("critical_radius: a > 0 required");
  if (!(q.s > 0.0)) throw std::domain_error("critical_radius: s > 0 required");
  double th = rearrange_threshold(q);
  return std::pow(th / q.a, (q.p - 1.0) / (q.N - q.p)) * q.R;
}

DerivedConstants derive(const ProblemParams& q0) {
  ProblemParams q = validate(q0);
  DerivedConstants d;
  d.beta = beta(q);
  d.p_star = p_star(q);
  d.hardy_const = hardy_constant(q);
  d.rearrange_threshold = rearrange_threshold(q);
  d.omega = sphere_area(static_cast<double>(q.N));
  d.A = (q.s > 0.0 && q.s < q.p) ? threshold_A(q)
                                 : std::numeric_limits<double>::quiet_NaN();
  d.R_a = (q.a > 0.0 && q.s > 0.0) ? critical_radius(q)
                                   : std::numeric_limits<double>::quiet_NaN();
  return d;
}

} // namespace hs
