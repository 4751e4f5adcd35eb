#include "hs/transforms.hpp"

#include "hs/special.hpp"

#include <cmath>
#include <stdexcept>

namespace hs {

namespace {

double alpha_of(int N, double p) { return (N - p) / (p - 1.0); }

} // namespace

TransformMap make_ioku(int N, double p, double R, double T) {
  if (!(p > 1.0 && p < N)) throw std::invalid_argument("make_ioku: 1 < p < N required");
  if (!(R > 0.0 && T >= R)) throw std::invalid_argument("make_ioku: T >= R > 0 required");
  return TransformMap{MapKind::ioku, N, p, R, T, 0};
}

TransformMap make_hk(int N, double p, double R) {
  if (!(p > 1.0 && p < N)) throw std::invalid_argument("make_hk: 1 < p < N required");
  if (!(R > 0.0)) throw std::invalid_argument("make_hk: R > 0 required");
  return TransformMap{MapKind::hk, N, p, R, kInfinity, 0};
}

TransformMap make_st(int N, int m, double R) {
  if (!(m > N && N >= 2)) throw std::invalid_argument("make_st: m > N >= 2 required");
  if (!(R > 0.0)) throw std::invalid_argument("make_st: R > 0 required");
  // The ST transform matches fundamental solutions of the N-Laplacian;
  // p is fixed to N.
  return TransformMap{MapKind::st, N, static_cast<double>(N), R, kInfinity, m};
}

TransformMap make_dim(int N, int m, double p) {
  if (!(p > 1.0 && p < N && N < m)) throw std::invalid_argument("make_dim: p < N < m required");
  return TransformMap{MapKind::dim, N, p, 1.0, kInfinity, m};
}

double st_weight_exponent(const TransformMap& map, double alpha) {
  if (map.kind != MapKind::st) throw std::logic_error("st_weight_exponent: ST map only");
  return ((map.m - 1.0) * map.N - (map.N - 1.0) * alpha) / (map.m - map.N);
}

double TransformMap::forward(double r) const {
  switch (kind) {
    case MapKind::ioku: {
      double al = alpha_of(N, p);
      if (!(r > 0.0 && r <= R)) throw std::domain_error("forward: r in (0,R] required");
      double off = std::isinf(T) ? 0.0 : std::pow(T, -al);
      return std::pow(std::pow(r, -al) - std::pow(R, -al) + off, -1.0 / al);
    }
    case MapKind::hk: {
      double al = alpha_of(N, p);
      if (!(r > 0.0 && r <= R)) throw std::domain_error("forward: r in (0,R] required");
      return std::pow(std::log(R) - std::log(r), -1.0 / al);
    }
    case MapKind::st: {
      double al = (m - N) / (N - 1.0);
      if (!(r > 0.0 && r <= R)) throw std::domain_error("forward: r in (0,R] required");
      return std::pow(std::log(R) - std::log(r), -1.0 / al);
    }
    case MapKind::dim: {
      if (!(r > 0.0)) throw std::domain_error("forward: r > 0 required");
      return std::pow(r, (m - p) / (N - p));
    }
  }
  throw std::logic_error("forward: unknown kind");
}

double TransformMap::inverse(double t) const {
  switch (kind) {
    case MapKind::ioku: {
      double al = alpha_of(N, p);
      if (!(t > 0.0)) throw std::domain_error("inverse: t > 0 required");
      double off = std::isinf(T) ? 0.0 : std::pow(T, -al);
      return std::pow(std::pow(t, -al) + std::pow(R, -al) - off, -1.0 / al);
    }
    case MapKind::hk: {
      double al = alpha_of(N, p);
      if (!(t > 0.0)) throw std::domain_error("inverse: t > 0 required");
      return R * std::exp(-std::pow(t, -al));
    }
    case MapKind::st: {
      double al = (m - N) / (N - 1.0);
      if (!(t > 0.0)) throw std::domain_error("inverse: t > 0 required");
      return R * std::exp(-std::pow(t, -al));
    }
    case MapKind::dim:
      if (!(t > 0.0)) throw std::domain_error("inverse: t > 0 required");
      return std::pow(t, (N - p) / (m - p));
  }
  throw std::logic_error("inverse: unknown kind");
}

double TransformMap::jacobian(double r) const {
  double t = forward(r);
  switch (kind) {
    case MapKind::ioku:
      return std::pow(r / t, (N - 1.0) / (p - 1.0));
    case MapKind::hk: {
      double al = alpha_of(N, p);
      return r * al * std::pow(t, -al - 1.0);
    }
    case MapKind::st: {
      double al = (m - N) / (N - 1.0);
      return r * al * std::pow(t, -al - 1.0);
    }
    case MapKind::dim: {
      double e = (m - p) / (N - p);
      return (1.0 / e) * std::pow(t, 1.0 / e - 1.0) * 1.0;
    }
  }
  throw std::logic_error("jacobian: unknown kind");
}

double TransformMap::outer_limit() const {
  return (kind == MapKind::ioku) ? T : kInfinity;
}

RadialFunction pushforward(const TransformMap& map, const RadialFunction& w) {
  RadialFunction u;
  TransformMap mp = map;
  u.value = [mp, w](double r) { return w.value(mp.forward(r)); };
  u.deriv = [mp, w](double r) {
    double t = mp.forward(r);
    return w.deriv(t) / mp.jacobian(r);
  };
  u.support_radius = (mp.kind == MapKind::dim)
                         ? (std::isinf(w.support_radius)
                                ? kInfinity
                                : mp.inverse(w.support_radius))
                         : std::min(mp.R, std::isinf(w.support_radius)
                                              ? mp.R
                                              : mp.inverse(w.support_radius));
  u.origin_exponent = w.origin_exponent;
  u.boundary_exponent = w.boundary_exponent;
  return u;
}

RadialFunction pullback(const TransformMap& map, const RadialFunction& u) {
  RadialFunction w;
  TransformMap mp = map;
  double lim = (map.kind == MapKind::dim) ? kInfinity : map.R;
  w.value = [mp, u, lim](double t) {
    double r = mp.inverse(t);
    if (r >= lim) return 0.0;
    return u.value(r);
  };
  w.deriv = [mp, u, lim](double t) {
    double r = mp.inverse(t);
    if (r <= 0.0 || r >= lim) return 0.0;  // underflow / round-off at the ends
    return u.deriv(r) * mp.jacobian(r);
  };
  w.support_radius = std::isinf(u.support_radius) || u.support_radius >= mp.R
                         ? mp.outer_limit()
                         : mp.forward(u.support_radius);
  w.origin_exponent = u.origin_exponent;
  w.boundary_exponent = u.boundary_exponent;
  return w;
}

namespace {

struct SideSpecs {
  QuadratureSpec lhs;
  QuadratureSpec rhs;
};

// Two deliberately different quadrature configurations so a transcription
// bug cannot hide behind correlated quadrature error.
SideSpecs independent_specs(const QuadratureSpec& base) {
  SideSpecs s{base, base};
  s.lhs.grade_left = std::max(4.0, base.grade_left + 1.0);
  s.lhs.grade_right = std::max(4.0, base.grade_right + 1.0);
  s.lhs.rule_order = 10;
  s.rhs.rule_order = 14;
  return s;
}

double radial_p_energy(const RadialFunction& u, double p, double dim, double upper,
                       const QuadratureSpec& spec) {
  upper = std::min(upper, u.support_radius);
  auto f = [&u, p, dim](double r) {
    double du = u.deriv(r);
    if (du == 0.0) return 0.0;  // avoid 0 * inf outside the support
    return std::pow(std::abs(du), p) * std::pow(r, dim - 1.0);
  };
  if (std::isinf(upper)) return integrate_tail(f, spec).value;
  return integrate_radial(f, 0.0, upper, spec).value;
}

double radial_weight_integral(const RadialFunction& u, double q, double dim, double s,
                              double upper, const QuadratureSpec& spec0) {
  upper = std::min(upper, u.support_radius);
  QuadratureSpec spec = spec0;
  spec.resolve_left(std::max(0.0, s - (dim - 1.0) - q * u.origin_exponent));
  auto f = [&u, q, dim, s](double r) {
    double uv = u.value(r);
    if (uv == 0.0) return 0.0;
    return std::pow(std::abs(uv), q) * std::pow(r, dim - 1.0 - s);
  };
  if (std::isinf(upper)) return integrate_tail(f, spec).value;
  return integrate_radial(f, 0.0, upper, spec).value;
}

// int_0^R |u|^q (log(R/r))^{-beta} r^{-1} dr via v = log(R/r).
double log_weight_integral(const RadialFunction& u, double q, double beta_exp, double R,
                           double zeta, const QuadratureSpec& spec0) {
  QuadratureSpec spec = spec0;
  spec.resolve_left(std::max(0.0, beta_exp - q * zeta));
  auto f = [&u, q, beta_exp, R](double v) {
    double r = R * std::exp(-v);
    double uv = u.value(r);
    if (uv == 0.0) return 0.0;
    return std::pow(std::abs(uv), q) * std::pow(v, -beta_exp);
  };
  return integrate_tail(f, spec).value;
}

} // namespace

ResidualReport verify_norm_identity(const TransformMap& map,
                                    const RadialFunction& testfn,
                                    IdentitySelector selector, double s, double q,
                                    const QuadratureSpec& base) {
  SideSpecs sp = independent_specs(base);
  const double omN = sphere_area(static_cast<double>(map.N));
  double lhs = 0.0, rhs = 0.0;
  switch (map.kind) {
    case MapKind::ioku: {
      RadialFunction w = pullback(map, testfn);
      if (selector == IdentitySelector::gradient) {
        lhs = omN * radial_p_energy(w, map.p, map.N, map.T, sp.lhs);
        rhs = omN * radial_p_energy(testfn, map.p, map.N, map.R, sp.rhs);
      } else {
        double al = alpha_of(map.N, map.p);
        double a = std::isinf(map.T) ? 1.0 : 1.0 - std::pow(map.R / map.T, al);
        ProblemParams pp{map.N, map.p, s, map.R, a, map.T};
        double qq = q > 0 ? q : p_star(pp);
        double b = beta(pp);
        lhs = omN * radial_weight_integral(w, qq, map.N, s, map.T, sp.lhs);
        QuadratureSpec rs = sp.rhs;
        rs.resolve_left(std::max(0.0, s - (map.N - 1.0)));
        if (a == 1.0)
          rs.resolve_right(std::max(0.0, b - qq * testfn.boundary_exponent));
        auto f = [&testfn, &pp, qq, b, al](double r) {
          double va = std::pow(r, -pp.s) *
                      std::pow(1.0 - pp.a * std::pow(r / pp.R, al), -b);
          return std::pow(std::abs(testfn.value(r)), qq) * va *
                 std::pow(r, pp.N - 1.0);
        };
        rhs = omN * integrate_radial(f, 0.0, map.R, rs).value;
      }
      break;
    }
    case MapKind::hk: {
      RadialFunction w = pullback(map, testfn);
      if (selector == IdentitySelector::gradient) {
        lhs = omN * radial_p_energy(w, map.p, map.N, kInfinity, sp.lhs);
        // int |x|^{p-N} |grad u|^p dx = om int |u'|^p r^{p-1} dr
        auto f = [&testfn, &map](double r) {
          return std::pow(std::abs(testfn.deriv(r)), map.p) *
                 std::pow(r, map.p - 1.0);
        };
        rhs = omN * integrate_radial(f, 0.0, map.R, sp.rhs).value;
      } else {
        ProblemParams pp{map.N, map.p, s, map.R, 0.0, kInfinity};
        double qq = q > 0 ? q : p_star(pp);
        double b = beta(pp);
        lhs = omN * radial_weight_integral(w, qq, map.N, s, kInfinity, sp.lhs);
        rhs = (map.p - 1.0) / (map.N - map.p) * omN *
              log_weight_integral(testfn, qq, b, map.R,
                                  testfn.boundary_exponent, sp.rhs);
      }
      break;
    }
    case MapKind::st: {
      RadialFunction w = pullback(map, testfn);
      double omM = sphere_area(static_cast<double>(map.m));
      if (selector == IdentitySelector::gradient) {
        // exact change of variables: (dt/dr)^{N-1} r^{N-1} = t^{m-1}/alpha^{N-1},
        // so the R^m radial integral carries omega_{N-1}/alpha^{N-1} rather
        // than omega_{m-1}
        double al = (map.m - map.N) / (map.N - 1.0);
        lhs = omN * std::pow(al, 1.0 - map.N) *
              radial_p_energy(w, map.N, map.m, kInfinity, sp.lhs);
        rhs = omN * radial_p_energy(testfn, map.N, map.N, map.R, sp.rhs);
      } else {
        double qq = q > 0 ? q : static_cast<double>(map.N);
        double g = st_weight_exponent(map, s);
        lhs = omM * radial_weight_integral(w, qq, map.m, s, kInfinity, sp.lhs);
        rhs = omM * (map.N - 1.0) / (map.m - map.N) *
              log_weight_integral(testfn, qq, g, map.R,
                                  testfn.boundary_exponent, sp.rhs);
      }
      break;
    }
    case MapKind::dim: {
      // testfn lives on R^N; u = pushforward lives on R^m.
      RadialFunction u = pushforward(map, testfn);
      double omM = sphere_area(static_cast<double>(map.m));
      if (selector == IdentitySelector::gradient) {
        lhs = omM * radial_p_energy(u, map.p, map.m, kInfinity, sp.lhs);
        rhs = omM * std::pow((map.m - map.p) / (map.N - map.p), map.p - 1.0) *
              radial_p_energy(testfn, map.p, map.N, kInfinity, sp.rhs);
      } else {
        double qq = q > 0 ? q : map.m * map.p / (map.m - map.p);
        double sw = (map.m - map.N) * map.p / (map.m - map.p);
        lhs = omM * radial_weight_integral(u, qq, map.m, 0.0, kInfinity, sp.lhs);
        rhs = omM * (map.N - map.p) / (map.m - map.p) *
              radial_weight_integral(testfn, qq, map.N, sw, kInfinity, sp.rhs);
      }
      break;
    }
  }
  ResidualReport rep;
  rep.lhs = lhs;
  rep.rhs = rhs;
  double scale = std::max(std::abs(lhs), std::abs(rhs));
  rep.residual = scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
  return rep;
}

double lp_operator_energy(const AxisymFunction& u, const ProblemParams& q,
                          const QuadratureSpec& spec) {
  validate(q);
  double al = (q.N - q.p) / (q.p - 1.0);
  if (q.a == 1.0) {
    // non-integrable angular factor if u carries angular content at r = R
    double rprobe = q.R * (1.0 - 1e-3);
    for (double th : {0.4, 1.0, 2.0, 2.7})
      if (std::abs(u.dtheta(rprobe, th)) > 1e-12 && u.support_radius >= q.R)
        throw std::runtime_error(
            "lp_operator_energy: a=1 with angular content touching r=R");
  }
  double upper = std::min(q.R, u.support_radius);
  auto g = [&u, &q, al](double r, double th) {
    double fac = 1.0 / (1.0 - q.a * std::pow(r / q.R, al));
    double ur = u.dr(r, th);
    double ut = u.dtheta(r, th) / r * fac;
    return std::pow(ur * ur + ut * ut, 0.5 * q.p);
  };
  return integrate_axisym(g, q.N, 0.0, upper, spec).value;
}

} // namespace hs
