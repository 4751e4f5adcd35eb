#include "hs/scalings.hpp"

#include <cmath>
#include <stdexcept>

namespace hs {

namespace {

double alpha_of(const ProblemParams& q) { return (q.N - q.p) / (q.p - 1.0); }

// rtilde(r) of the radial_map scaling on [0, Rtilde] -> [0, R]
double rtilde(double r, double lam, double a, double al, double R) {
  return lam * r *
         std::pow(1.0 + a * (std::pow(lam, al) - 1.0) * std::pow(r / R, al),
                  -1.0 / al);
}

double rtilde_deriv(double r, double lam, double a, double al, double R) {
  double rt = rtilde(r, lam, a, al, R);
  return std::pow(lam, -al) * std::pow(rt / r, al + 1.0);
}

// inverse of rtilde: the radius whose image is rt
double rtilde_inverse(double rt, double lam, double a, double al, double R) {
  double v = std::pow(lam, al) * std::pow(rt, -al) -
             a * (std::pow(lam, al) - 1.0) * std::pow(R, -al);
  return std::pow(v, -1.0 / al);
}

} // namespace

void validate_scaling(const ScalingSpec& spec, const ProblemParams& q) {
  if (!(spec.lambda > 0.0)) throw std::domain_error("scaling: lambda > 0 violated");
  switch (spec.kind) {
    case ScalingKind::usual:
      if (std::isfinite(q.T) && spec.lambda < 1.0)
        throw std::domain_error("scaling: lambda >= 1 required on a bounded domain");
      break;
    case ScalingKind::radial_map:
    case ScalingKind::scale_p:
      if (!(spec.a >= 0.0 && spec.a <= 1.0))
        throw std::domain_error("scaling: a in [0,1] violated");
      if (spec.a != 1.0 && spec.lambda < 1.0)
        throw std::domain_error("scaling: lambda >= 1 required unless a = 1");
      break;
    case ScalingKind::scale_n:
      if (!(spec.b >= 1.0)) throw std::domain_error("scaling: b >= 1 violated");
      if (spec.b != 1.0 && spec.lambda > 1.0)
        throw std::domain_error("scaling: lambda <= 1 required unless b = 1");
      break;
  }
}

double scaled_support_radius(const ScalingSpec& spec, const ProblemParams& q) {
  if (spec.kind != ScalingKind::radial_map && spec.kind != ScalingKind::scale_p)
    throw std::logic_error("scaled_support_radius: radial_map/scale_p only");
  double R = spec.kind == ScalingKind::scale_p ? 1.0 : q.R;
  double al = alpha_of(q);
  return R * std::pow(std::pow(spec.lambda, al) * (1.0 - spec.a) + spec.a,
                      -1.0 / al);
}

RadialFunction apply_scaling(const ScalingSpec& spec, const RadialFunction& u,
                             const ProblemParams& q0) {
  ProblemParams q = validate(q0);
  validate_scaling(spec, q);
  double lam = spec.lambda;
  double pre = std::pow(lam, (q.N - q.p) / q.p);
  RadialFunction out = u;
  switch (spec.kind) {
    case ScalingKind::usual: {
      out.value = [u, lam, pre](double t) { return pre * u.value(lam * t); };
      out.deriv = [u, lam, pre](double t) { return pre * lam * u.deriv(lam * t); };
      out.support_radius =
          std::isinf(u.support_radius) ? kInfinity : u.support_radius / lam;
      break;
    }
    case ScalingKind::radial_map:
    case ScalingKind::scale_p: {
      double R = spec.kind == ScalingKind::scale_p ? 1.0 : q.R;
      double al = alpha_of(q);
      double a = spec.a;
      double Rt = scaled_support_radius(spec, q);
      double supp = std::isinf(u.support_radius) || u.support_radius >= R
                        ? Rt
                        : rtilde_inverse(u.support_radius, lam, a, al, R);
      out.value = [u, lam, a, al, R, pre, supp](double r) {
        if (r >= supp) return 0.0;
        return pre * u.value(rtilde(r, lam, a, al, R));
      };
      out.deriv = [u, lam, a, al, R, pre, supp](double r) {
        if (r >= supp) return 0.0;
        return pre * u.deriv(rtilde(r, lam, a, al, R)) *
               rtilde_deriv(r, lam, a, al, R);
      };
      out.support_radius = supp;
      break;
    }
    case ScalingKind::scale_n: {
      double b = spec.b;
      double preN = std::pow(lam, -(q.N - 1.0) / q.N);
      out.value = [u, lam, b, preN](double r) {
        return preN * u.value(std::pow(b, 1.0 - lam) * std::pow(r, lam));
      };
      out.deriv = [u, lam, b, preN](double r) {
        double t = std::pow(b, 1.0 - lam) * std::pow(r, lam);
        return preN * u.deriv(t) * lam * t / r;
      };
      out.support_radius =
          std::isinf(u.support_radius)
              ? kInfinity
              : std::pow(u.support_radius * std::pow(b, lam - 1.0), 1.0 / lam);
      break;
    }
  }
  return out;
}

AxisymFunction apply_scaling(const ScalingSpec& spec, const AxisymFunction& u,
                             const ProblemParams& q0) {
  ProblemParams q = validate(q0);
  validate_scaling(spec, q);
  double lam = spec.lambda;
  double pre = std::pow(lam, (q.N - q.p) / q.p);
  AxisymFunction out = u;
  switch (spec.kind) {
    case ScalingKind::usual: {
      out.value = [u, lam, pre](double t, double th) { return pre * u.value(lam * t, th); };
      out.dr = [u, lam, pre](double t, double th) { return pre * lam * u.dr(lam * t, th); };
      out.dtheta = [u, lam, pre](double t, double th) { return pre * u.dtheta(lam * t, th); };
      out.support_radius =
          std::isinf(u.support_radius) ? kInfinity : u.support_radius / lam;
      break;
    }
    case ScalingKind::radial_map:
    case ScalingKind::scale_p: {
      double R = spec.kind == ScalingKind::scale_p ? 1.0 : q.R;
      double al = alpha_of(q);
      double a = spec.a;
      double Rt = scaled_support_radius(spec, q);
      double supp = std::isinf(u.support_radius) || u.support_radius >= R
                        ? Rt
                        : rtilde_inverse(u.support_radius, lam, a, al, R);
      out.value = [u, lam, a, al, R, pre, supp](double r, double th) {
        if (r >= supp) return 0.0;
        return pre * u.value(rtilde(r, lam, a, al, R), th);
      };
      out.dr = [u, lam, a, al, R, pre, supp](double r, double th) {
        if (r >= supp) return 0.0;
        return pre * u.dr(rtilde(r, lam, a, al, R), th) *
               rtilde_deriv(r, lam, a, al, R);
      };
      out.dtheta = [u, lam, a, al, R, pre, supp](double r, double th) {
        if (r >= supp) return 0.0;
        return pre * u.dtheta(rtilde(r, lam, a, al, R), th);
      };
      out.support_radius = supp;
      break;
    }
    case ScalingKind::scale_n: {
      double b = spec.b;
      double preN = std::pow(lam, -(q.N - 1.0) / q.N);
      auto map = [lam, b](double r) { return std::pow(b, 1.0 - lam) * std::pow(r, lam); };
      out.value = [u, map, preN](double r, double th) { return preN * u.value(map(r), th); };
      out.dr = [u, map, lam, preN](double r, double th) {
        double t = map(r);
        return preN * u.dr(t, th) * lam * t / r;
      };
      out.dtheta = [u, map, preN](double r, double th) { return preN * u.dtheta(map(r), th); };
      out.support_radius =
          std::isinf(u.support_radius)
              ? kInfinity
              : std::pow(u.support_radius * std::pow(b, lam - 1.0), 1.0 / lam);
      break;
    }
  }
  return out;
}

double angular_content(const AxisymFunction& u, const ProblemParams& q) {
  double R = std::min(q.R, u.support_radius);
  double best = 0.0;
  for (int i = 1; i <= 9; ++i)
    for (double th : {0.3, 0.9, 1.5, 2.1, 2.7})
      best = std::max(best, std::abs(u.dtheta(0.1 * i * R, th)));
  return best;
}

std::vector<CurvePoint> scaled_energy_curve(ScalingKind kind,
                                            const AxisymFunction& u,
                                            const std::vector<double>& lambdas,
                                            const ProblemParams& q0,
                                            const QuadratureSpec& spec) {
  ProblemParams q = validate(q0);
  double al = alpha_of(q);
  std::vector<CurvePoint> curve;
  curve.reserve(lambdas.size());
  for (double lam : lambdas) {
    CurvePoint pt;
    pt.lambda = lam;
    IntegralResult res;
    switch (kind) {
      case ScalingKind::scale_n: {
        if (!std::isfinite(lam))
          throw std::domain_error("scaled_energy_curve: finite lambda required");
        // |v_t w + (1/(lam t)) grad_S v|^N after the change of variables
        double upper = std::min(1.0, u.support_radius);
        auto g = [&u, lam, &q](double t, double th) {
          double vt = u.dr(t, th);
          double va = u.dtheta(t, th) / (lam * t);
          return std::pow(vt * vt + va * va, 0.5 * q.N);
        };
        res = integrate_axisym(g, q.N, 0.0, upper, spec);
        break;
      }
      case ScalingKind::scale_p: {
        double a = q.a;
        double upper = std::min(1.0, u.support_radius);
        // angular factor (r dt/dr)^{-1}; closed form in t, with its
        // lambda -> infinity limit
        auto fac = [a, al, lam](double t) {
          double ta = std::pow(t, -al);
          if (std::isinf(lam)) return (1.0 + a / (ta - a)) / t;
          double mu = std::pow(lam, al) - 1.0;
          return (1.0 + a * mu / (std::pow(lam, al) * ta - a * mu)) / t;
        };
        auto g = [&u, fac, &q](double t, double th) {
          double wt = u.dr(t, th);
          double wa = u.dtheta(t, th) * fac(t);
          return std::pow(wt * wt + wa * wa, 0.5 * q.p);
        };
        res = integrate_axisym(g, q.N, 0.0, upper, spec);
        break;
      }
      case ScalingKind::usual:
      case ScalingKind::radial_map: {
        ScalingSpec sp{kind, lam, q.a, 1.0};
        AxisymFunction v = apply_scaling(sp, u, q);
        double upper = std::min(q.R, v.support_radius);
        auto g = [&v, &q](double r, double th) {
          double vr = v.dr(r, th);
          double va = v.dtheta(r, th) / r;
          return std::pow(vr * vr + va * va, 0.5 * q.p);
        };
        res = integrate_axisym(g, q.N, 0.0, upper, spec);
        break;
      }
    }
    pt.energy = res.value;
    pt.error = res.error;
    curve.push_back(pt);
  }
  return curve;
}

} // namespace hs
