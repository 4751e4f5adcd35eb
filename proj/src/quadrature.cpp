#include "hs/quadrature.hpp"

#include "hs/special.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hs {

namespace {

// Pairwise summation keeps results bit-identical regardless of how the
// panel contributions were produced.
double pairwise_sum(std::vector<double>& v, std::size_t lo, std::size_t hi) {
  if (hi - lo <= 8) {
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += v[i];
    return s;
  }
  std::size_t mid = lo + (hi - lo) / 2;
  return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

double pairwise_sum(std::vector<double>& v) { return pairwise_sum(v, 0, v.size()); }

std::map<int, std::pair<Eigen::VectorXd, Eigen::VectorXd>> g_gl_cache;
std::mutex g_gl_mutex;

} // namespace

void gauss_legendre(int n, Eigen::VectorXd& nodes, Eigen::VectorXd& weights) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
  {
    std::lock_guard<std::mutex> lock(g_gl_mutex);
    auto it = g_gl_cache.find(n);
    if (it != g_gl_cache.end()) {
      nodes = it->second.first;
      weights = it->second.second;
      return;
    }
  }
  nodes.resize(n);
  weights.resize(n);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev initial guess, Newton on P_n.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-15) break;
    }
    nodes[i] = -z;
    nodes[n - 1 - i] = z;
    weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[n - 1 - i] = weights[i];
  }
  std::lock_guard<std::mutex> lock(g_gl_mutex);
  g_gl_cache.emplace(n, std::make_pair(nodes, weights));
}

QuadratureSpec& QuadratureSpec::resolve_left(double sigma) {
  if (sigma >= 1.0)
    throw std::domain_error("QuadratureSpec: non-integrable left singularity");
  if (sigma > 0.0) {
    grade_left = std::min(120.0, std::max(grade_left, 2.5 / (1.0 - sigma)));
    sigma_left = std::max(sigma_left, sigma);
  }
  return *this;
}

QuadratureSpec& QuadratureSpec::resolve_right(double sigma) {
  if (sigma >= 1.0)
    throw std::domain_error("QuadratureSpec: non-integrable right singularity");
  if (sigma > 0.0) {
    grade_right = std::min(120.0, std::max(grade_right, 2.5 / (1.0 - sigma)));
    sigma_right = std::max(sigma_right, sigma);
  }
  return *this;
}

namespace {

// Integral of f over one graded half. `left` selects which endpoint the
// grading clusters toward; [0,1] in xi always maps onto (anchor, anchor+h*dir).
// f modelled as C d^{-sigma} near the endpoint: evaluate at a reference
// distance where it is representable and extrapolate in log space.
double endpoint_model(const Integrand1D& f, double anchor, double dir, double d,
                      double d_ref, double sigma) {
  double fref = f(anchor + dir * d_ref);
  if (fref == 0.0 || !std::isfinite(fref)) return 0.0;
  double mag = std::exp(std::log(std::abs(fref)) -
                        sigma * (std::log(d) - std::log(d_ref)));
  return fref < 0.0 ? -mag : mag;
}

double graded_half(const Integrand1D& f, double anchor, double h, double dir,
                   double grade, double sigma, int panels,
                   const Eigen::VectorXd& gx, const Eigen::VectorXd& gw) {
  std::vector<double> contrib;
  contrib.reserve(static_cast<std::size_t>(panels) * gx.size());
  const double inv_panels = 1.0 / panels;
  // Distance below which (anchor + dir*d) no longer represents d
  // faithfully; such nodes are evaluated at d_safe and extrapolated with
  // the declared algebraic model d^{-sigma}.
  const double d_safe = 1e-9 * std::abs(anchor);
  for (int pnl = 0; pnl < panels; ++pnl) {
    double x0 = pnl * inv_panels;
    double x1 = (pnl + 1) * inv_panels;
    double mid = 0.5 * (x0 + x1), half = 0.5 * (x1 - x0);
    for (int k = 0; k < gx.size(); ++k) {
      double xi = mid + half * gx[k];
      double t = std::exp(grade * std::log(xi));  // xi^grade
      if (t < 1e-290) continue;  // node too deep in the graded tail to represent
      double jac = grade * t / xi;               // grade * xi^{grade-1}
      double d = h * t;
      double fv;
      if (d < d_safe) {
        fv = endpoint_model(f, anchor, dir, d, d_safe, sigma);
      } else {
        fv = f(anchor + dir * d);
        if (!std::isfinite(fv) && sigma > 0.0) {
          // direct evaluation overflowed inside the singular layer; find a
          // representable reference distance and extrapolate
          double d_ref = d;
          double fr = fv;
          while (!std::isfinite(fr) && d_ref < 0.25 * h) {
            d_ref *= 16.0;
            fr = f(anchor + dir * d_ref);
          }
          if (std::isfinite(fr)) fv = endpoint_model(f, anchor, dir, d, d_ref, sigma);
        }
      }
      contrib.push_back(fv * jac * h * half * gw[k]);
    }
  }
  return pairwise_sum(contrib);
}

} // namespace

IntegralResult integrate_radial(const Integrand1D& f, double a, double b,
                                const QuadratureSpec& spec) {
  if (!(b > a)) throw std::invalid_argument("integrate_radial: b > a required");
  if (spec.rel_tol <= 0 || spec.max_panels < 1 || spec.grade_left < 1 ||
      spec.grade_right < 1)
    throw std::invalid_argument("integrate_radial: invalid spec");
  Eigen::VectorXd gx, gw;
  gauss_legendre(spec.rule_order, gx, gw);
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  IntegralResult res;
  double prev = std::numeric_limits<double>::quiet_NaN();
  for (int n = 4; n <= spec.max_panels; n *= 2) {
    double left =
        graded_half(f, a, h, +1.0, spec.grade_left, spec.sigma_left, n, gx, gw);
    double right =
        graded_half(f, b, h, -1.0, spec.grade_right, spec.sigma_right, n, gx, gw);
    double val = left + right;
    if (!std::isfinite(val))
      throw std::runtime_error("integrate_radial: non-finite integrand value");
    res.value = val;
    res.panels = n;
    if (std::isfinite(prev)) {
      res.error = std::abs(val - prev);
      double scale = std::max(std::abs(val), 1e-300);
      if (res.error <= spec.rel_tol * scale) {
        res.converged = true;
        return res;
      }
    }
    prev = val;
  }
  return res;  // not converged; caller decides whether that is fatal
}

IntegralResult integrate_tail(const Integrand1D& f, const QuadratureSpec& spec) {
  // t = u/(1-u) maps (0,1) -> (0,inf), dt = du/(1-u)^2 = (1+t)^2 du.
  // The product form avoids underflow of (1-u)^2 deep in the tail.
  auto g = [&f](double u) {
    double om = 1.0 - u;
    if (om <= 0.0) return 0.0;  // u rounded to 1: negligible under decay
    double t = u / om;
    if (!std::isfinite(t)) return 0.0;
    double fv = f(t);
    if (fv == 0.0) return 0.0;
    return fv * (1.0 + t) * (1.0 + t);
  };
  // Crude non-decay probe: the compactified integrand must not blow up
  // toward u = 1.
  double probe_near = std::abs(g(1.0 - 1e-6));
  double probe_mid = std::abs(g(0.5)) + std::abs(g(0.9)) + 1e-300;
  if (std::isfinite(probe_near) && probe_near > 1e12 * probe_mid)
    throw std::runtime_error("integrate_tail: integrand does not decay");
  return integrate_radial(g, 0.0, 1.0, spec);
}

IntegralResult integrate_angular(const Integrand1D& h, int N,
                                 const QuadratureSpec& spec) {
  if (N < 2) throw std::invalid_argument("integrate_angular: N >= 2 required");
  auto g = [&h, N](double th) {
    double s = std::sin(th);
    double w = (N == 2) ? 1.0 : std::pow(s, N - 2);
    return h(th) * w;
  };
  QuadratureSpec s = spec;
  s.grade_left = s.grade_right = 1.0;  // smooth in theta
  return integrate_radial(g, 0.0, std::numbers::pi, s);
}

IntegralResult integrate_axisym(const Integrand2D& g, int N, double r0, double r1,
                                const QuadratureSpec& spec) {
  if (N < 2) throw std::invalid_argument("integrate_axisym: N >= 2 required");
  double om = sphere_area(N - 1.0);  // area of S^{N-2}; equals 2 for N = 2
  QuadratureSpec inner = spec;
  inner.rel_tol = 0.1 * spec.rel_tol;
  double err_inner_max = 0.0;
  auto radial = [&](double r) {
    auto slice = [&g, r](double th) { return g(r, th); };
    IntegralResult ir = integrate_angular(slice, N, inner);
    return ir.value * std::pow(r, N - 1);
  };
  IntegralResult out = integrate_radial(radial, r0, r1, spec);
  out.value *= om;
  out.error = out.error * om + err_inner_max;
  return out;
}

} // namespace hs
