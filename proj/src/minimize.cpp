#include "hs/minimize.hpp"

#include "hs/quadrature.hpp"
#include "hs/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hs {

DiscreteQuotient::DiscreteQuotient(const ProblemParams& q, int cells, double grading,
                                   int cell_rule)
    : q_(validate(q)), grading_(grading) {
  if (cells < 8) throw std::invalid_argument("DiscreteQuotient: cells >= 8 required");
  Eigen::VectorXd inner = graded_nodes(cells, q_.R, grading);
  x_.resize(cells + 1);
  x_[0] = 0.0;
  x_.tail(cells) = inner;
  const int M = cells;
  double om = sphere_area(static_cast<double>(q_.N));
  cell_e_.resize(M);
  for (int i = 0; i < M; ++i)
    cell_e_[i] = om * (std::pow(x_[i + 1], q_.N) - std::pow(x_[i], q_.N)) / q_.N;

  Eigen::VectorXd gn, gw;
  gauss_legendre(cell_rule, gn, gw);
  wq_.resize(M, cell_rule);
  tq_.resize(M, cell_rule);
  for (int i = 0; i < M; ++i) {
    double h = x_[i + 1] - x_[i];
    for (int k = 0; k < cell_rule; ++k) {
      double r = x_[i] + 0.5 * h * (1.0 + gn[k]);
      tq_(i, k) = (r - x_[i]) / h;
      wq_(i, k) = gw[k] * 0.5 * h * potential(r, q_) * std::pow(r, q_.N - 1.0) * om;
    }
  }
}

namespace {
inline double dof_at(const Eigen::VectorXd& u, int i) {
  return i < u.size() ? u[i] : 0.0;  // zero trace at the last mesh point
}
} // namespace

double DiscreteQuotient::energy(const Eigen::VectorXd& u) const {
  const int M = dof();
  double e = 0.0;
  for (int i = 0; i < M; ++i) {
    double du = (dof_at(u, i + 1) - u[i]) / (x_[i + 1] - x_[i]);
    e += std::pow(std::abs(du), q_.p) * cell_e_[i];
  }
  return e;
}

double DiscreteQuotient::weighted(const Eigen::VectorXd& u) const {
  const int M = dof();
  double ps = p_star(q_);
  double d = 0.0;
  for (int i = 0; i < M; ++i) {
    double a = u[i], b = dof_at(u, i + 1);
    for (int k = 0; k < wq_.cols(); ++k) {
      double t = tq_(i, k);
      d += wq_(i, k) * std::pow(std::abs(a * (1.0 - t) + b * t), ps);
    }
  }
  return d;
}

double DiscreteQuotient::quotient(const Eigen::VectorXd& u) const {
  return energy(u) / std::pow(weighted(u), q_.p / p_star(q_));
}

Eigen::VectorXd DiscreteQuotient::gradient(const Eigen::VectorXd& u) const {
  const int M = dof();
  double ps = p_star(q_);
  double E = energy(u), D = weighted(u);
  Eigen::VectorXd gE = Eigen::VectorXd::Zero(M);
  for (int i = 0; i < M; ++i) {
    double h = x_[i + 1] - x_[i];
    double du = (dof_at(u, i + 1) - u[i]) / h;
    double flux = q_.p * std::pow(std::abs(du), q_.p - 2.0) * du * cell_e_[i] / h;
    gE[i] -= flux;
    if (i + 1 < M) gE[i + 1] += flux;
  }
  Eigen::VectorXd gD = Eigen::VectorXd::Zero(M);
  for (int i = 0; i < M; ++i) {
    double a = u[i], b = dof_at(u, i + 1);
    for (int k = 0; k < wq_.cols(); ++k) {
      double t = tq_(i, k);
      double v = a * (1.0 - t) + b * t;
      double dv = ps * std::pow(std::abs(v), ps - 2.0) * v * wq_(i, k);
      gD[i] += dv * (1.0 - t);
      if (i + 1 < M) gD[i + 1] += dv * t;
    }
  }
  double m = q_.p / ps;
  return (gE - (m * E / D) * gD) / std::pow(D, m);
}

Eigen::VectorXd DiscreteQuotient::descent_direction(const Eigen::VectorXd& u) const {
  const int M = dof();
  Eigen::VectorXd g = gradient(u);
  // tridiagonal weighted p-stiffness: k_i couples DOFs i and i+1
  Eigen::VectorXd k(M);
  for (int i = 0; i < M; ++i) {
    double h = x_[i + 1] - x_[i];
    double du = (dof_at(u, i + 1) - u[i]) / h;
    k[i] = q_.p * std::pow(std::max(std::abs(du), 1e-12), q_.p - 2.0) * cell_e_[i] /
           (h * h);
  }
  Eigen::VectorXd diag(M), lower(M);
  for (int i = 0; i < M; ++i) {
    diag[i] = k[i] + (i > 0 ? k[i - 1] : 0.0);
    lower[i] = i > 0 ? -k[i - 1] : 0.0;
  }
  // Thomas algorithm
  Eigen::VectorXd c(M), d(M);
  c[0] = -k[0] / diag[0];  // superdiag of row 0 is -k[0]
  d[0] = g[0] / diag[0];
  for (int i = 1; i < M; ++i) {
    double upper = (i < M - 1) ? -k[i] : 0.0;
    double denom = diag[i] - lower[i] * c[i - 1];
    c[i] = upper / denom;
    d[i] = (g[i] - lower[i] * d[i - 1]) / denom;
  }
  Eigen::VectorXd sol(M);
  sol[M - 1] = d[M - 1];
  for (int i = M - 2; i >= 0; --i) sol[i] = d[i] - c[i] * sol[i + 1];
  return sol;
}

Eigen::VectorXd DiscreteQuotient::normalize(const Eigen::VectorXd& u) const {
  double d = weighted(u);
  if (!(d > 0.0)) throw std::runtime_error("DiscreteQuotient: zero weighted norm");
  return u * std::pow(d, -1.0 / p_star(q_));
}

Eigen::VectorXd DiscreteQuotient::sample(const RadialFunction& f) const {
  const int M = dof();
  Eigen::VectorXd u(M);
  for (int i = 0; i < M; ++i)
    u[i] = x_[i] < f.support_radius ? f.value(x_[i]) : 0.0;
  return u;
}

GridFunction DiscreteQuotient::interpolant(const Eigen::VectorXd& u) const {
  const int M = dof();
  Eigen::VectorXd nodes = x_.tail(M);
  Eigen::VectorXd vals(M);
  vals.head(M - 1) = u.tail(M - 1);
  vals[M - 1] = 0.0;
  return GridFunction(nodes, vals, grading_);
}

MinimizeResult minimize_radial(const ProblemParams& q0, const RadialFunction& start,
                               const FlowOptions& opt) {
  ProblemParams q = validate(q0);
  DiscreteQuotient dq(q, opt.cells, opt.grading);
  Eigen::VectorXd u = dq.normalize(dq.sample(start));
  double Q = dq.quotient(u);
  MinimizeResult res;
  res.trace.push_back(Q);
  int step = 0;
  for (; step < opt.max_steps; ++step) {
    Eigen::VectorXd g = dq.descent_direction(u);
    double tau = opt.initial_step * u.norm() / std::max(g.norm(), 1e-300);
    double Qnew = Q;
    Eigen::VectorXd unew;
    bool accepted = false;
    for (int bt = 0; bt < 40; ++bt, tau *= 0.5) {
      Eigen::VectorXd trial = dq.normalize(u - tau * g);
      double Qt = dq.quotient(trial);
      if (Qt < Q) {
        Qnew = Qt;
        unew = std::move(trial);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;  // no decrease at any step size: stationary
    u = std::move(unew);
    res.trace.push_back(Qnew);
    bool done = (Q - Qnew) < opt.rel_tol * Q;
    Q = Qnew;
    if (done) break;
  }
  res.evaluations = step + 1;
  res.minimizer = dq.interpolant(u);
  RadialFunction f = res.minimizer.as_radial();
  QuadratureSpec spec;
  spec.rel_tol = 1e-7;  // interpolant has kinks at every mesh node
  QuotientReport rep = rayleigh_quotient(f, q, spec);
  res.quotient = rep.quotient;
  res.error = rep.error;
  res.certified = rep.quotient > 0.0 && rep.error < 1e-4 * rep.quotient;
  return res;
}

MinimizeResult minimize_radial(const ProblemParams& q, const FlowOptions& opt) {
  RadialFunction start;
  double R = q.R;
  start.value = [R](double r) { return r < R ? 1.0 - (r / R) * (r / R) : 0.0; };
  start.deriv = [R](double r) { return r < R ? -2.0 * r / (R * R) : 0.0; };
  start.support_radius = R;
  return minimize_radial(q, start, opt);
}

RadialFunction truncated_power(double delta, const ProblemParams& q0) {
  ProblemParams q = validate(q0);
  double e = -(q.N - q.p) / q.p + delta;
  if (!(delta > 0.0 && e < 0.0))
    throw std::invalid_argument("truncated_power: 0 < delta < (N-p)/p required");
  double R = q.R;
  double edge = std::pow(R, e);
  RadialFunction u;
  u.value = [e, edge, R](double r) { return r < R ? std::pow(r, e) - edge : 0.0; };
  u.deriv = [e, R](double r) { return r < R ? e * std::pow(r, e - 1.0) : 0.0; };
  u.support_radius = R;
  u.origin_exponent = e;
  u.boundary_exponent = 1.0;
  return u;
}

RadialFunction truncated_bubble(double mu, const ProblemParams& q0) {
  ProblemParams q = validate(q0);
  if (!(mu > 0.0)) throw std::invalid_argument("truncated_bubble: mu > 0 required");
  if (!(q.s < q.p)) throw std::invalid_argument("truncated_bubble: s < p required");
  double kap = (q.p - q.s) / (q.p - 1.0);
  double ex = (q.N - q.p) / (q.p - q.s);
  double R = q.R;
  auto w = [mu, kap, ex](double r) {
    return std::pow(1.0 + std::pow(r / mu, kap), -ex);
  };
  double edge = w(R);
  RadialFunction u;
  u.value = [w, edge, R](double r) { return r < R ? w(r) - edge : 0.0; };
  u.deriv = [mu, kap, ex, R](double r) {
    if (r >= R) return 0.0;
    double z = std::pow(r / mu, kap);
    return -ex * std::pow(1.0 + z, -ex - 1.0) * kap * z / r;
  };
  u.support_radius = R;
  u.origin_exponent = 0.0;
  u.boundary_exponent = 1.0;
  return u;
}

namespace {

struct Profile {
  std::function<double(double)> v, dv;  // on [0,1], v(1) = 0
  double energy = 0.0;                  // int_{B_1} |grad v|^p
  double kink = -1.0;                   // interior break point, if any
};

Profile make_profile(TrialFamily family, double mu, const ProblemParams& q) {
  Profile pr;
  switch (family) {
    case TrialFamily::bump_cone: {
      pr.v = [](double t) { return t <= 0.5 ? 1.0 : 2.0 * (1.0 - t); };
      pr.dv = [](double t) { return t <= 0.5 ? 0.0 : -2.0; };
      pr.kink = 0.5;
      pr.energy = bump_profile_energy(BumpProfile::cone, q.N, q.p);
      break;
    }
    case TrialFamily::bump_smooth: {
      // C^1 quadratic blend: 1 - 2t^2 for t <= 1/2, 2(1-t)^2 beyond
      pr.v = [](double t) { return t <= 0.5 ? 1.0 - 2.0 * t * t : 2.0 * (1.0 - t) * (1.0 - t); };
      pr.dv = [](double t) { return t <= 0.5 ? -4.0 * t : -4.0 * (1.0 - t); };
      pr.kink = 0.5;
      pr.energy = bump_profile_energy(BumpProfile::smooth, q.N, q.p);
      break;
    }
    case TrialFamily::bump_bubble: {
      double kap = q.p / (q.p - 1.0);
      double ex = (q.N - q.p) / q.p;
      auto w = [mu, kap, ex](double t) {
        return std::pow(1.0 + std::pow(t / mu, kap), -ex);
      };
      double edge = w(1.0);
      pr.v = [w, edge](double t) { return w(t) - edge; };
      pr.dv = [mu, kap, ex](double t) {
        if (t == 0.0) return 0.0;
        double z = std::pow(t / mu, kap);
        return -ex * std::pow(1.0 + z, -ex - 1.0) * kap * z / t;
      };
      auto f = [&pr, &q](double t) {
        return std::pow(std::abs(pr.dv(t)), q.p) * std::pow(t, q.N - 1.0);
      };
      pr.energy = sphere_area(static_cast<double>(q.N)) *
                  integrate_radial(f, 0.0, 1.0).value;
      break;
    }
    default:
      throw std::logic_error("make_profile: bump families only");
  }
  return pr;
}

} // namespace

QuotientReport bump_trial_quotient(const ProblemParams& q0, TrialFamily family,
                                   double rho, double eps, double mu,
                                   const QuadratureSpec& spec) {
  ProblemParams q = validate(q0);
  if (!(eps > 0.0 && rho > eps))
    throw std::domain_error("bump_trial_quotient: 0 < eps < rho required");
  if (!(rho + eps <= q.R))
    throw std::domain_error("bump_trial_quotient: bump must fit inside the ball");
  if (q.a == 1.0 && rho + eps >= q.R)
    throw std::domain_error("bump_trial_quotient: a = 1 needs rho + eps < R");
  Profile pr = make_profile(family, mu, q);
  double num = std::pow(eps, q.N - q.p) * pr.energy;
  double ps = p_star(q);
  // potential integrated over the bump in spherical coordinates centered
  // at the bump: |x| = sqrt(rho^2 + d^2 + 2 rho d cos(psi))
  auto g = [&pr, &q, rho, eps, ps](double d, double psi) {
    double vv = pr.v(d / eps);
    if (vv == 0.0) return 0.0;
    double ell = std::sqrt(rho * rho + d * d + 2.0 * rho * d * std::cos(psi));
    return std::pow(std::abs(vv), ps) * potential(ell, q);
  };
  IntegralResult den;
  if (pr.kink > 0.0) {
    IntegralResult inner = integrate_axisym(g, q.N, 0.0, pr.kink * eps, spec);
    IntegralResult outer = integrate_axisym(g, q.N, pr.kink * eps, eps, spec);
    den.value = inner.value + outer.value;
    den.error = inner.error + outer.error;
    den.converged = inner.converged && outer.converged;
  } else {
    den = integrate_axisym(g, q.N, 0.0, eps, spec);
  }
  QuotientReport rep;
  rep.energy = num;
  rep.weighted = den.value;
  rep.quotient = num / std::pow(den.value, q.p / ps);
  rep.error = rep.quotient * (q.p / ps) * std::abs(den.error / den.value);
  rep.converged = den.converged;
  return rep;
}

namespace {

using ObjFn = std::function<double(const Eigen::VectorXd&)>;

// Standard Nelder-Mead with deterministic initialization; returns the
// best point visited. `scale` sets the initial simplex edge per axis.
std::pair<double, Eigen::VectorXd> nelder_mead(const ObjFn& f, Eigen::VectorXd x0,
                                               const Eigen::VectorXd& scale,
                                               int maxeval, long& evals) {
  const int n = static_cast<int>(x0.size());
  std::vector<Eigen::VectorXd> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (int i = 1; i <= n; ++i) xs[i][i - 1] += scale[i - 1];
  for (int i = 0; i <= n; ++i) {
    fs[i] = f(xs[i]);
    ++evals;
  }
  int used = n + 1;
  auto order = [&] {
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (fs[j] < fs[i]) {
          std::swap(fs[i], fs[j]);
          std::swap(xs[i], xs[j]);
        }
  };
  order();
  while (used < maxeval) {
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) centroid += xs[i];
    centroid /= n;
    Eigen::VectorXd xr = centroid + (centroid - xs[n]);
    double fr = f(xr);
    ++used;
    if (fr < fs[0]) {
      Eigen::VectorXd xe = centroid + 2.0 * (centroid - xs[n]);
      double fe = f(xe);
      ++used;
      if (fe < fr) {
        xs[n] = xe;
        fs[n] = fe;
      } else {
        xs[n] = xr;
        fs[n] = fr;
      }
    } else if (fr < fs[n - 1]) {
      xs[n] = xr;
      fs[n] = fr;
    } else {
      Eigen::VectorXd xc = centroid + 0.5 * (xs[n] - centroid);
      double fc = f(xc);
      ++used;
      if (fc < fs[n]) {
        xs[n] = xc;
        fs[n] = fc;
      } else {
        for (int i = 1; i <= n; ++i) {
          xs[i] = xs[0] + 0.5 * (xs[i] - xs[0]);
          fs[i] = f(xs[i]);
          ++used;
        }
      }
    }
    order();
    if (std::abs(fs[n] - fs[0]) <= 1e-10 * (std::abs(fs[0]) + 1e-12)) break;
  }
  evals += used - (n + 1);
  return {fs[0], xs[0]};
}

constexpr double kPenalty = 1e12;

} // namespace

MinimizeResult best_trial_quotient(const ProblemParams& q0, TrialFamily family,
                                   int budget) {
  ProblemParams q = validate(q0);
  MinimizeResult res;
  long evals = 0;
  const double R = q.R;
  const double eps_min = 1e-3 * R;  // below this the bump is unresolvable
  double best = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_x;

  auto run_starts = [&](const std::vector<Eigen::VectorXd>& starts,
                        const Eigen::VectorXd& scale, const ObjFn& f) {
    int per = std::max(40, budget / std::max<int>(1, starts.size()));
    for (const auto& s : starts) {
      auto [fv, xv] = nelder_mead(f, s, scale, per, evals);
      if (fv < best) {
        best = fv;
        best_x = xv;
      }
    }
  };

  switch (family) {
    case TrialFamily::bump_cone:
    case TrialFamily::bump_smooth:
    case TrialFamily::bump_bubble: {
      bool has_mu = family == TrialFamily::bump_bubble;
      auto decode = [&](const Eigen::VectorXd& x, double& rho, double& eps,
                        double& mu) {
        eps = x[0];
        double gap = q.a == 1.0 ? 2.0 * eps_min : 0.0;
        rho = eps * 1.02 + x[1] * (R - gap - eps * 2.02);
        mu = has_mu ? std::exp(x[2]) : 1.0;
      };
      ObjFn f = [&](const Eigen::VectorXd& x) {
        double eps = x[0], frac = x[1];
        if (eps < eps_min || eps > 0.24 * R || frac < 0.0 || frac > 1.0)
          return kPenalty * (1.0 + x.cwiseAbs().sum());
        if (has_mu && (x[2] < std::log(0.01) || x[2] > std::log(10.0)))
          return kPenalty;
        double rho, e, mu;
        decode(x, rho, e, mu);
        try {
          return bump_trial_quotient(q, family, rho, e, mu).quotient;
        } catch (const std::exception&) {
          return kPenalty;
        }
      };
      std::vector<Eigen::VectorXd> starts;
      for (double eps : {0.02 * R, 0.06 * R, 0.12 * R, 0.2 * R})
        for (double frac : {0.55, 0.95}) {
          Eigen::VectorXd s(has_mu ? 3 : 2);
          s[0] = eps;
          s[1] = frac;
          if (has_mu) s[2] = std::log(0.5);
          starts.push_back(s);
        }
      Eigen::VectorXd scale(has_mu ? 3 : 2);
      scale[0] = 0.02 * R;
      scale[1] = 0.1;
      if (has_mu) scale[2] = 0.7;
      run_starts(starts, scale, f);
      double rho, eps, mu;
      decode(best_x, rho, eps, mu);
      QuotientReport rep = bump_trial_quotient(q, family, rho, eps, mu);
      res.quotient = rep.quotient;
      res.error = rep.error;
      res.certified = rep.converged;
      res.witness_names = {"rho", "eps"};
      res.witness = {rho, eps};
      if (has_mu) {
        res.witness_names.push_back("mu");
        res.witness.push_back(mu);
      }
      break;
    }
    case TrialFamily::radial_power: {
      double dmax = (q.N - q.p) / q.p;
      ObjFn f = [&](const Eigen::VectorXd& x) {
        if (x[0] < 1e-3 || x[0] > 0.95 * dmax) return kPenalty;
        return rayleigh_quotient(truncated_power(x[0], q), q).quotient;
      };
      std::vector<Eigen::VectorXd> starts;
      for (int i = 1; i <= 8; ++i) {
        Eigen::VectorXd s(1);
        s[0] = dmax * i / 10.0;
        starts.push_back(s);
      }
      Eigen::VectorXd scale(1);
      scale[0] = 0.05 * dmax;
      run_starts(starts, scale, f);
      QuotientReport rep = rayleigh_quotient(truncated_power(best_x[0], q), q);
      res.quotient = rep.quotient;
      res.error = rep.error;
      res.certified = rep.converged;
      res.witness_names = {"delta"};
      res.witness = {best_x[0]};
      break;
    }
    case TrialFamily::radial_bubble: {
      ObjFn f = [&](const Eigen::VectorXd& x) {
        if (x[0] < std::log(1e-3) || x[0] > std::log(10.0)) return kPenalty;
        return rayleigh_quotient(truncated_bubble(std::exp(x[0]), q), q).quotient;
      };
      std::vector<Eigen::VectorXd> starts;
      for (int i = 0; i < 8; ++i) {
        Eigen::VectorXd s(1);
        s[0] = std::log(1e-3) + i * (std::log(10.0) - std::log(1e-3)) / 7.0;
        starts.push_back(s);
      }
      Eigen::VectorXd scale(1);
      scale[0] = 0.5;
      run_starts(starts, scale, f);
      double mu = std::exp(best_x[0]);
      QuotientReport rep = rayleigh_quotient(truncated_bubble(mu, q), q);
      res.quotient = rep.quotient;
      res.error = rep.error;
      res.certified = rep.converged;
      res.witness_names = {"mu"};
      res.witness = {mu};
      break;
    }
  }
  res.evaluations = evals;
  res.trace = {res.quotient};
  return res;
}

AStarReport estimate_a_star_upper(const ProblemParams& q0,
                                  const std::vector<double>& a_grid, double margin,
                                  TrialFamily family, int budget) {
  ProblemParams q = validate(q0);
  if (!(q.s > 0.0 && q.s < q.p))
    throw std::domain_error("estimate_a_star_upper: 0 < s < p required");
  AStarReport rep;
  rep.radial_level = hardy_sobolev_constant(q);
  double threshold = rearrange_threshold(q);
  for (double a : a_grid) {
    if (!(a > threshold && a < 1.0))
      throw std::domain_error(
          "estimate_a_star_upper: a-grid must lie in (rearrange threshold, 1)");
    ProblemParams qa = q;
    qa.a = a;
    MinimizeResult r = best_trial_quotient(qa, family, budget);
    rep.a_grid.push_back(a);
    rep.best.push_back(r.quotient);
    if (r.quotient < rep.radial_level - margin) {
      rep.a_hat = a;
      rep.witness = std::move(r);
      break;
    }
  }
  return rep;
}

DecayFit decay_fit(const ProblemParams& q0, const std::vector<double>& eps_grid,
                   const QuadratureSpec& spec) {
  ProblemParams q = validate(q0);
  if (q.a != 1.0) throw std::domain_error("decay_fit: a = 1 required");
  if (!(q.s < q.p)) throw std::domain_error("decay_fit: s < p required");
  if (eps_grid.size() < 3)
    throw std::invalid_argument("decay_fit: at least 3 grid points required");
  DecayFit fit;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double eps : eps_grid) {
    double rho = bump_center(eps, q);
    QuotientReport rep = bump_trial_quotient(q, TrialFamily::bump_cone, rho, eps,
                                             1.0, spec);
    fit.eps.push_back(eps);
    fit.quotient.push_back(rep.quotient);
    double x = std::log(eps), y = std::log(rep.quotient);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(eps_grid.size());
  fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.intercept = (sy - fit.slope * sx) / n;
  return fit;
}

MonotonicityReport monotonicity_scan(const std::vector<AxisymFunction>& suite,
                                     const ProblemParams& base,
                                     const std::vector<double>& a_grid,
                                     const QuadratureSpec& spec) {
  MonotonicityReport rep;
  rep.a_grid = a_grid;
  rep.all_nonincreasing = true;
  for (const AxisymFunction& u : suite) {
    std::vector<double> row;
    for (double a : a_grid) {
      ProblemParams q = base;
      q.a = a;
      row.push_back(rayleigh_quotient(u, q, spec).quotient);
    }
    for (size_t j = 1; j < row.size(); ++j)
      if (row[j] > row[j - 1] * (1.0 + 1e-9)) rep.all_nonincreasing = false;
    rep.quotients.push_back(std::move(row));
  }
  return rep;
}

void to_json(nlohmann::json& j, const MinimizeResult& r) {
  j = nlohmann::json{{"quotient", r.quotient},
                     {"error", r.error},
                     {"certified", r.certified},
                     {"evaluations", r.evaluations},
                     {"trace", r.trace}};
  if (!r.witness.empty()) {
    nlohmann::json w;
    for (size_t i = 0; i < r.witness.size(); ++i)
      w[r.witness_names[i]] = r.witness[i];
    j["witness"] = w;
  }
}

} // namespace hs
