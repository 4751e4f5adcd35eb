#ifndef HS_FUNCTIONALS_HPP
#define HS_FUNCTIONALS_HPP

#include "hs/funcspace.hpp"
#include "hs/params.hpp"
#include "hs/quadrature.hpp"

#include <nlohmann/json.hpp>

namespace hs {

/// V_a(r) = r^{-s} (1 - a (r/R)^{(N-p)/(p-1)})^{-beta(s)}.
double potential(double r, const ProblemParams& q);

/// omega_{N-1} int_0^{min(R, supp)} |u'|^p r^{N-1} dr.
IntegralResult dirichlet_energy(const RadialFunction& u, const ProblemParams& q,
                                const QuadratureSpec& spec = {});

/// Full p-Dirichlet energy of an axisymmetric function,
/// omega_{N-2} int int (u_r^2 + (u_theta/r)^2)^{p/2} sin^{N-2} r^{N-1}.
IntegralResult dirichlet_energy(const AxisymFunction& u, const ProblemParams& q,
                                const QuadratureSpec& spec = {});

/// int_{B_R} |u|^{p*(s)} V_a dx. Quadrature gradings are chosen from the
/// exponent hints on u; throws std::runtime_error when those hints say
/// the integral diverges (a = 1 with too little boundary decay).
IntegralResult weighted_norm(const RadialFunction& u, const ProblemParams& q,
                             const QuadratureSpec& spec = {});
IntegralResult weighted_norm(const AxisymFunction& u, const ProblemParams& q,
                             const QuadratureSpec& spec = {});

struct QuotientReport {
  double energy = 0.0;        // numerator integral
  double weighted = 0.0;      // denominator integral, before the power
  double quotient = 0.0;      // energy / weighted^{p/p*}
  double error = 0.0;         // first-order propagated quadrature error
  bool converged = false;
};

/// Q_a(u) = E(u) / (int |u|^{p*} V_a)^{p/p*}.
QuotientReport rayleigh_quotient(const RadialFunction& u, const ProblemParams& q,
                                 const QuadratureSpec& spec = {});
QuotientReport rayleigh_quotient(const AxisymFunction& u, const ProblemParams& q,
                                 const QuadratureSpec& spec = {});

void to_json(nlohmann::json& j, const QuotientReport& r);

} // namespace hs

#endif
