#include "hs/funcspace.hpp"

#include "hs/special.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hs {

namespace {

double signed_pow(double w, double e) {
  // |w|^{e-1} w, continuous at 0 for e > 0
  if (w == 0.0) return 0.0;
  return std::pow(std::abs(w), e - 1.0) * w;
}

} // namespace

double eval_W(double lambda, double t, const ProblemParams& q) {
  if (!(lambda > 0)) throw std::invalid_argument("eval_W: lambda > 0 required");
  if (q.s >= q.p) throw std::domain_error("eval_W: family degenerates at s = p");
  double kappa = (q.p - q.s) / (q.p - 1.0);
  double nu = (q.N - q.p) / (q.p - q.s);
  return std::pow(lambda, (q.N - q.p) / q.p) *
         std::pow(1.0 + std::pow(lambda * t, kappa), -nu);
}

double eval_W_deriv(double lambda, double t, const ProblemParams& q) {
  if (!(lambda > 0)) throw std::invalid_argument("eval_W: lambda > 0 required");
  if (q.s >= q.p) throw std::domain_error("eval_W: family degenerates at s = p");
  double kappa = (q.p - q.s) / (q.p - 1.0);
  double nu = (q.N - q.p) / (q.p - q.s);
  double lt = lambda * t;
  if (lt == 0.0 && kappa < 1.0) return -kappa * nu * std::numeric_limits<double>::infinity();
  double base = 1.0 + std::pow(lt, kappa);
  return std::pow(lambda, (q.N - q.p) / q.p) * (-nu) * std::pow(base, -nu - 1.0) *
         kappa * std::pow(lt, kappa - 1.0) * lambda;
}

RadialFunction make_W(double lambda, const ProblemParams& q) {
  RadialFunction f;
  f.value = [lambda, q](double t) { return eval_W(lambda, t, q); };
  f.deriv = [lambda, q](double t) { return eval_W_deriv(lambda, t, q); };
  f.support_radius = kInfinity;
  f.origin_exponent = 0.0;
  return f;
}

namespace {

// The Ioku map with T = infinity: t(r) = (r^{-alpha} - R^{-alpha})^{-1/alpha}.
double ioku_t_of_r(double r, double alpha, double R) {
  return std::pow(std::pow(r, -alpha) - std::pow(R, -alpha), -1.0 / alpha);
}

} // namespace

double eval_U(double lambda, double r, const ProblemParams& q) {
  if (!(lambda > 0)) throw std::invalid_argument("eval_U: lambda > 0 required");
  if (q.s >= q.p) throw std::domain_error("eval_U: family degenerates at s = p");
  if (r >= q.R) throw std::domain_error("eval_U: r < R required");
  double kappa = (q.p - q.s) / (q.p - 1.0);
  double nu = (q.N - q.p) / (q.p - q.s);
  double alpha = (q.N - q.p) / (q.p - 1.0);
  if (r <= 0.0) return std::pow(lambda, (q.N - q.p) / q.p);
  double bracket = 1.0 + std::pow(lambda * r, kappa) *
                             std::pow(1.0 - std::pow(r / q.R, alpha),
                                      -(q.p - q.s) / (q.N - q.p));
  return std::pow(lambda, (q.N - q.p) / q.p) * std::pow(bracket, -nu);
}

double eval_U_deriv(double lambda, double r, const ProblemParams& q) {
  if (r >= q.R) throw std::domain_error("eval_U: r < R required");
  double alpha = (q.N - q.p) / (q.p - 1.0);
  if (r <= 0.0) r = std::min(1e-300, q.R * 1e-12);
  double t = ioku_t_of_r(r, alpha, q.R);
  double dt_dr = std::pow(t / r, (q.N - 1.0) / (q.p - 1.0));
  return eval_W_deriv(lambda, t, q) * dt_dr;
}

RadialFunction make_U(double lambda, const ProblemParams& q) {
  RadialFunction f;
  double R = q.R;
  f.value = [lambda, q, R](double r) { return r >= R ? 0.0 : eval_U(lambda, r, q); };
  f.deriv = [lambda, q, R](double r) { return r >= R ? 0.0 : eval_U_deriv(lambda, r, q); };
  f.support_radius = R;
  f.origin_exponent = 0.0;
  f.boundary_exponent = 1.0;  // U ~ c (R - r) near the boundary
  return f;
}

namespace {

double bump_v(double t, BumpProfile profile) {
  if (t >= 1.0) return 0.0;
  if (profile == BumpProfile::cone) return t <= 0.5 ? 1.0 : 2.0 * (1.0 - t);
  // C^1 quadratic blend
  return t <= 0.5 ? 1.0 - 2.0 * t * t : 2.0 * (1.0 - t) * (1.0 - t);
}

double bump_dv(double t, BumpProfile profile) {
  if (t >= 1.0) return 0.0;
  if (profile == BumpProfile::cone) return t <= 0.5 ? 0.0 : -2.0;
  return t <= 0.5 ? -4.0 * t : -4.0 * (1.0 - t);
}

} // namespace

double bump_center(double eps, const ProblemParams& q) { return q.R - 2.0 * eps; }

AxisymFunction boundary_bump(double eps, BumpProfile profile, const ProblemParams& q) {
  if (!(eps > 0.0 && eps < q.R / 4.0))
    throw std::invalid_argument("boundary_bump: 0 < eps < R/4 required");
  double c = bump_center(eps, q);
  AxisymFunction u;
  auto dist = [c](double r, double th) {
    return std::sqrt(std::max(0.0, r * r + c * c - 2.0 * r * c * std::cos(th)));
  };
  u.value = [eps, c, profile, dist](double r, double th) {
    double d = dist(r, th);
    return d >= eps ? 0.0 : bump_v(d / eps, profile);
  };
  u.dr = [eps, c, profile, dist](double r, double th) {
    double d = dist(r, th);
    if (d >= eps || d < 1e-14) return 0.0;
    return bump_dv(d / eps, profile) / eps * (r - c * std::cos(th)) / d;
  };
  u.dtheta = [eps, c, profile, dist](double r, double th) {
    double d = dist(r, th);
    if (d >= eps || d < 1e-14) return 0.0;
    return bump_dv(d / eps, profile) / eps * (r * c * std::sin(th)) / d;
  };
  u.support_radius = c + eps;
  return u;
}

double bump_profile_energy(BumpProfile profile, int N, double p,
                           const QuadratureSpec& spec) {
  auto f = [profile, N, p](double t) {
    double dv = bump_dv(t, profile);
    return std::pow(std::abs(dv), p) * std::pow(t, N - 1.0);
  };
  // split at the profile break
  IntegralResult a = integrate_radial(f, 0.0, 0.5, spec);
  IntegralResult b = integrate_radial(f, 0.5, 1.0, spec);
  return sphere_area(static_cast<double>(N)) * (a.value + b.value);
}

RadialFunction spherical_average(const AxisymFunction& w, double q, int N,
                                 const QuadratureSpec& spec) {
  if (!(q > 1.0)) throw std::invalid_argument("spherical_average: q > 1 required");
  double log_ratio = log_sphere_area(N - 1.0) - log_sphere_area(static_cast<double>(N));
  double ratio = std::exp(log_ratio);  // omega_{N-2} / omega_{N-1}
  RadialFunction f;
  f.support_radius = w.support_radius;
  f.origin_exponent = 0.0;
  f.value = [w, q, N, ratio, spec](double r) {
    auto h = [&w, q, r](double th) { return std::pow(std::abs(w.value(r, th)), q); };
    double A = ratio * integrate_angular(h, N, spec).value;
    return A <= 0.0 ? 0.0 : std::pow(A, 1.0 / q);
  };
  f.deriv = [w, q, N, ratio, spec](double r) {
    auto h = [&w, q, r](double th) { return std::pow(std::abs(w.value(r, th)), q); };
    double A = ratio * integrate_angular(h, N, spec).value;
    if (A <= 0.0) return 0.0;
    auto hd = [&w, q, r](double th) {
      return signed_pow(w.value(r, th), q - 1.0) * w.dr(r, th);
    };
    double Ad = ratio * integrate_angular(hd, N, spec).value;
    return std::pow(A, 1.0 / q - 1.0) * Ad;
  };
  return f;
}

AxisymFunction as_axisym(const RadialFunction& u) {
  AxisymFunction a;
  a.value = [u](double r, double) { return u.value(r); };
  a.dr = [u](double r, double) { return u.deriv(r); };
  a.dtheta = [](double, double) { return 0.0; };
  a.support_radius = u.support_radius;
  return a;
}

Eigen::VectorXd graded_nodes(int n, double R, double grading) {
  if (n < 2) throw std::invalid_argument("graded_nodes: n >= 2 required");
  Eigen::VectorXd r(n);
  for (int i = 1; i <= n; ++i) {
    double xi = static_cast<double>(i) / n;
    double x = xi <= 0.5 ? 0.5 * std::pow(2.0 * xi, grading)
                         : 1.0 - 0.5 * std::pow(2.0 * (1.0 - xi), grading);
    r[i - 1] = R * x;
  }
  r[n - 1] = R;
  return r;
}

GridFunction::GridFunction(Eigen::VectorXd nodes, Eigen::VectorXd values, double grading)
    : nodes_(std::move(nodes)), values_(std::move(values)), grading_(grading) {
  if (nodes_.size() != values_.size() || nodes_.size() < 2)
    throw std::invalid_argument("GridFunction: need >= 2 matching nodes/values");
  if (nodes_[0] <= 0.0)
    throw std::invalid_argument("GridFunction: first node must be > 0");
  for (int i = 1; i < nodes_.size(); ++i)
    if (nodes_[i] <= nodes_[i - 1])
      throw std::invalid_argument("GridFunction: nodes must be strictly increasing");
  build_slopes();
}

void GridFunction::build_slopes() {
  const int n = static_cast<int>(nodes_.size());
  Eigen::VectorXd d(n - 1);
  for (int i = 0; i < n - 1; ++i)
    d[i] = (values_[i + 1] - values_[i]) / (nodes_[i + 1] - nodes_[i]);
  slopes_.resize(n);
  slopes_[0] = d[0];
  slopes_[n - 1] = d[n - 2];
  for (int i = 1; i < n - 1; ++i)
    slopes_[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);
  // Fritsch-Carlson limiter
  for (int i = 0; i < n - 1; ++i) {
    if (d[i] == 0.0) {
      slopes_[i] = slopes_[i + 1] = 0.0;
      continue;
    }
    double a = slopes_[i] / d[i], b = slopes_[i + 1] / d[i];
    double s2 = a * a + b * b;
    if (s2 > 9.0) {
      double tau = 3.0 / std::sqrt(s2);
      slopes_[i] = tau * a * d[i];
      slopes_[i + 1] = tau * b * d[i];
    }
  }
}

namespace {

int find_interval(const Eigen::VectorXd& x, double r) {
  int lo = 0, hi = static_cast<int>(x.size()) - 1;
  if (r <= x[0]) return 0;
  if (r >= x[hi]) return hi - 1;
  while (hi - lo > 1) {
    int mid = (lo + hi) / 2;
    (x[mid] <= r ? lo : hi) = mid;
  }
  return lo;
}

} // namespace

double GridFunction::value(double r) const {
  int i = find_interval(nodes_, r);
  double h = nodes_[i + 1] - nodes_[i];
  double t = (r - nodes_[i]) / h;
  double h00 = (1 + 2 * t) * (1 - t) * (1 - t);
  double h10 = t * (1 - t) * (1 - t);
  double h01 = t * t * (3 - 2 * t);
  double h11 = t * t * (t - 1);
  return h00 * values_[i] + h10 * h * slopes_[i] + h01 * values_[i + 1] +
         h11 * h * slopes_[i + 1];
}

double GridFunction::deriv(double r) const {
  int i = find_interval(nodes_, r);
  double h = nodes_[i + 1] - nodes_[i];
  double t = (r - nodes_[i]) / h;
  double d00 = 6 * t * (t - 1) / h;
  double d10 = (1 - t) * (1 - 3 * t);
  double d01 = -d00;
  double d11 = t * (3 * t - 2);
  return d00 * values_[i] + d10 * slopes_[i] + d01 * values_[i + 1] +
         d11 * slopes_[i + 1];
}

RadialFunction GridFunction::as_radial() const {
  RadialFunction f;
  GridFunction g = *this;
  double last = nodes_[nodes_.size() - 1];
  f.value = [g, last](double r) { return r >= last ? 0.0 : g.value(r); };
  f.deriv = [g, last](double r) { return r >= last ? 0.0 : g.deriv(r); };
  f.support_radius = last;
  f.boundary_exponent = 1.0;
  return f;
}

void GridFunction::save_csv(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("GridFunction: cannot open " + path);
  out << "# graded mesh exponent " << grading_ << "\n";
  out << "node,value\n";
  out.precision(17);
  for (int i = 0; i < nodes_.size(); ++i)
    out << nodes_[i] << "," << values_[i] << "\n";
}

GridFunction GridFunction::load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("GridFunction: cannot open " + path);
  std::string line;
  double grading = 1.0;
  std::vector<double> xs, vs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto pos = line.find_last_of(' ');
      if (pos != std::string::npos) grading = std::stod(line.substr(pos + 1));
      continue;
    }
    if (line.rfind("node", 0) == 0) continue;
    std::istringstream ss(line);
    std::string a, b;
    if (std::getline(ss, a, ',') && std::getline(ss, b)) {
      xs.push_back(std::stod(a));
      vs.push_back(std::stod(b));
    }
  }
  Eigen::VectorXd x = Eigen::Map<Eigen::VectorXd>(xs.data(), xs.size());
  Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(vs.data(), vs.size());
  return GridFunction(x, v, grading);
}

} // namespace hs
