#include "hs/functionals.hpp"

#include "hs/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hs {

double potential(double r, const ProblemParams& q) {
  double al = (q.N - q.p) / (q.p - 1.0);
  double b = beta(q);
  return std::pow(r, -q.s) * std::pow(1.0 - q.a * std::pow(r / q.R, al), -b);
}

IntegralResult dirichlet_energy(const RadialFunction& u, const ProblemParams& q0,
                                const QuadratureSpec& spec0) {
  ProblemParams q = validate(q0);
  double upper = std::min(q.R, u.support_radius);
  QuadratureSpec spec = spec0;
  // |u'|^p ~ r^{(zeta-1)p} near the origin when u ~ r^zeta; zeta may be
  // negative (unbounded trials). resolve_left throws when divergent.
  if (u.origin_exponent != 0.0 && u.origin_exponent < 1.0)
    spec.resolve_left(
        std::max(0.0, (1.0 - u.origin_exponent) * q.p - (q.N - 1.0)));
  auto f = [&u, &q](double r) {
    double du = u.deriv(r);
    if (du == 0.0) return 0.0;
    return std::pow(std::abs(du), q.p) * std::pow(r, q.N - 1.0);
  };
  IntegralResult res = std::isfinite(upper) ? integrate_radial(f, 0.0, upper, spec)
                                            : integrate_tail(f, spec);
  res.value *= sphere_area(static_cast<double>(q.N));
  res.error *= sphere_area(static_cast<double>(q.N));
  return res;
}

IntegralResult dirichlet_energy(const AxisymFunction& u, const ProblemParams& q0,
                                const QuadratureSpec& spec) {
  ProblemParams q = validate(q0);
  double upper = std::min(q.R, u.support_radius);
  auto g = [&u, &q](double r, double th) {
    double ur = u.dr(r, th);
    double ut = u.dtheta(r, th) / r;
    return std::pow(ur * ur + ut * ut, 0.5 * q.p);
  };
  return integrate_axisym(g, q.N, 0.0, upper, spec);
}

namespace {

// Shared grading logic; throws when the hinted boundary decay cannot
// compensate the a = 1 blow-up of the potential.
QuadratureSpec weight_spec(const ProblemParams& q, double origin_exp,
                           double boundary_exp, double support,
                           const QuadratureSpec& spec0) {
  QuadratureSpec spec = spec0;
  double ps = p_star(q);
  spec.resolve_left(std::max(0.0, q.s - (q.N - 1.0) - ps * origin_exp));
  if (q.a == 1.0 && support >= q.R) {
    double sigma = beta(q) - ps * boundary_exp;
    if (sigma >= 1.0)
      throw std::runtime_error(
          "weighted_norm: divergent at r = R (a = 1, insufficient boundary decay)");
    spec.resolve_right(std::max(0.0, sigma));
  }
  return spec;
}

} // namespace

IntegralResult weighted_norm(const RadialFunction& u, const ProblemParams& q0,
                             const QuadratureSpec& spec0) {
  ProblemParams q = validate(q0);
  double upper = std::min(q.R, u.support_radius);
  QuadratureSpec spec =
      weight_spec(q, u.origin_exponent, u.boundary_exponent, u.support_radius, spec0);
  double ps = p_star(q);
  auto f = [&u, &q, ps](double r) {
    double uv = u.value(r);
    if (uv == 0.0) return 0.0;
    return std::pow(std::abs(uv), ps) * potential(r, q) *
           std::pow(r, q.N - 1.0);
  };
  IntegralResult res = std::isfinite(upper) ? integrate_radial(f, 0.0, upper, spec)
                                            : integrate_tail(f, spec);
  res.value *= sphere_area(static_cast<double>(q.N));
  res.error *= sphere_area(static_cast<double>(q.N));
  return res;
}

IntegralResult weighted_norm(const AxisymFunction& u, const ProblemParams& q0,
                             const QuadratureSpec& spec0) {
  ProblemParams q = validate(q0);
  double upper = std::min(q.R, u.support_radius);
  // No exponent hints on axisymmetric functions: assume bounded near the
  // origin and first-order vanishing at r = R.
  QuadratureSpec spec = weight_spec(q, 0.0, 1.0, u.support_radius, spec0);
  double ps = p_star(q);
  auto g = [&u, &q, ps](double r, double th) {
    return std::pow(std::abs(u.value(r, th)), ps) * potential(r, q);
  };
  return integrate_axisym(g, q.N, 0.0, upper, spec);
}

namespace {

template <class Fn>
QuotientReport quotient_impl(const Fn& u, const ProblemParams& q,
                             const QuadratureSpec& spec) {
  QuotientReport rep;
  IntegralResult num = dirichlet_energy(u, q, spec);
  IntegralResult den = weighted_norm(u, q, spec);
  rep.energy = num.value;
  rep.weighted = den.value;
  double ex = q.p / p_star(q);
  rep.quotient = num.value / std::pow(den.value, ex);
  // dQ = Q (dE/E + ex dD/D) to first order
  rep.error = std::abs(rep.quotient) *
              (std::abs(num.error / num.value) +
               ex * std::abs(den.error / den.value));
  rep.converged = num.converged && den.converged;
  return rep;
}

} // namespace

QuotientReport rayleigh_quotient(const RadialFunction& u, const ProblemParams& q,
                                 const QuadratureSpec& spec) {
  return quotient_impl(u, q, spec);
}

QuotientReport rayleigh_quotient(const AxisymFunction& u, const ProblemParams& q,
                                 const QuadratureSpec& spec) {
  return quotient_impl(u, q, spec);
}

void to_json(nlohmann::json& j, const QuotientReport& r) {
  j = nlohmann::json{{"energy", r.energy},
                     {"weighted", r.weighted},
                     {"quotient", r.quotient},
                     {"error", r.error},
                     {"converged", r.converged}};
}

} // namespace hs
