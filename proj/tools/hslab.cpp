// Command-line driver: every capability as a reproducible subcommand with
// JSON or CSV output. Exit codes: 0 success, 1 verification failure,
// 2 invalid arguments.
#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hs/funcspace.hpp"
#include "hs/functionals.hpp"
#include "hs/limits.hpp"
#include "hs/minimize.hpp"
#include "hs/params.hpp"
#include "hs/scalings.hpp"
#include "hs/special.hpp"
#include "hs/transforms.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

using nlohmann::json;

namespace {

struct Common {
  int N = 3;
  double p = 2.0, s = 1.0, R = 1.0, a = 0.0, T = 0.0;  // T <= 0 means infinity
  std::string out;
  std::string format = "json";
  int threads = 0;  // cap only; results are independent of it
};

hs::ProblemParams params_of(const Common& c) {
  hs::ProblemParams q{c.N, c.p, c.s, c.R, c.a, c.T > 0.0 ? c.T : hs::kInfinity};
  return hs::validate(q);
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--N", c.N, "dimension");
  cmd->add_option("--p", c.p, "gradient exponent");
  cmd->add_option("--s", c.s, "weight exponent");
  cmd->add_option("--R", c.R, "ball radius");
  cmd->add_option("--a", c.a, "potential strength");
  cmd->add_option("--T", c.T, "outer radius (<= 0 for infinity)");
  cmd->add_option("--out", c.out, "output file (default stdout)");
  cmd->add_option("--format", c.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--threads", c.threads, "parallelism cap (0 = all cores)");
}

json echo_config(const std::string& cmd, const Common& c) {
  return json{{"command", cmd}, {"N", c.N},           {"p", c.p},
              {"s", c.s},       {"R", c.R},           {"a", c.a},
              {"T", c.T},       {"format", c.format}, {"threads", c.threads}};
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot open output file " + c.out);
  f << text << "\n";
}

void emit_json(const Common& c, const json& j) { emit(c, j.dump(2)); }

std::vector<double> parse_grid(const std::string& csv) {
  std::vector<double> g;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) g.push_back(std::stod(tok));
  if (g.empty()) throw std::invalid_argument("empty grid");
  return g;
}

// --- built-in test functions -------------------------------------------

hs::RadialFunction poly_trace(double R) {
  hs::RadialFunction u;
  u.value = [R](double r) { return r < R ? 1.0 - (r / R) * (r / R) : 0.0; };
  u.deriv = [R](double r) { return r < R ? -2.0 * r / (R * R) : 0.0; };
  u.support_radius = R;
  return u;
}

hs::RadialFunction quadratic_trace(double R) {
  hs::RadialFunction u;
  u.value = [R](double r) {
    double z = 1.0 - r / R;
    return r < R ? z * z : 0.0;
  };
  u.deriv = [R](double r) { return r < R ? -2.0 * (1.0 - r / R) / R : 0.0; };
  u.support_radius = R;
  u.boundary_exponent = 2.0;
  return u;
}

// C^1 bump supported on the annulus (lo, hi)
hs::RadialFunction annulus_bump(double lo, double hi) {
  hs::RadialFunction u;
  double c = 16.0 / std::pow(hi - lo, 4);  // peak value 1 at the midpoint
  u.value = [lo, hi, c](double r) {
    if (r <= lo || r >= hi) return 0.0;
    double a = r - lo, b = hi - r;
    return c * a * a * b * b;
  };
  u.deriv = [lo, hi, c](double r) {
    if (r <= lo || r >= hi) return 0.0;
    double a = r - lo, b = hi - r;
    return c * 2.0 * a * b * (b - a);
  };
  u.support_radius = hi;
  u.boundary_exponent = 2.0;
  return u;
}

// non-radial axisymmetric test on B_1 with angular content
hs::AxisymFunction angular_test() {
  auto g = [](double r) {
    if (r <= 0.2 || r >= 0.9) return 0.0;
    double a = r - 0.2, b = 0.9 - r;
    return 40.0 * a * a * b * b;
  };
  auto dg = [](double r) {
    if (r <= 0.2 || r >= 0.9) return 0.0;
    double a = r - 0.2, b = 0.9 - r;
    return 40.0 * 2.0 * a * b * (b - a);
  };
  hs::AxisymFunction v;
  v.value = [g](double r, double th) { return g(r) * std::cos(th); };
  v.dr = [dg](double r, double th) { return dg(r) * std::cos(th); };
  v.dtheta = [g](double r, double th) { return -g(r) * std::sin(th); };
  v.support_radius = 0.9;
  return v;
}

// --- subcommands --------------------------------------------------------

int cmd_constants(const Common& c) {
  hs::ProblemParams q = params_of(c);
  hs::DerivedConstants d = hs::derive(q);
  json j = {{"config", echo_config("constants", c)},
            {"beta", d.beta},
            {"p_star", d.p_star},
            {"hardy_const", d.hardy_const},
            {"rearrange_threshold", d.rearrange_threshold},
            {"omega", d.omega},
            {"best_constant", hs::hardy_sobolev_constant(q)}};
  if (std::isfinite(d.A)) j["A"] = d.A;
  if (std::isfinite(d.R_a)) j["R_a"] = d.R_a;
  emit_json(c, j);
  return 0;
}

int cmd_verify_transforms(const Common& c, const std::string& kind, int m,
                          double tol) {
  hs::ProblemParams q = params_of(c);
  hs::TransformMap map;
  std::vector<hs::RadialFunction> suite;
  if (kind == "ioku") {
    map = hs::make_ioku(q.N, q.p, q.R, std::isfinite(q.T) ? q.T : hs::kInfinity);
    suite = {poly_trace(q.R), quadratic_trace(q.R),
             annulus_bump(0.3 * q.R, 0.95 * q.R)};
  } else if (kind == "hk") {
    map = hs::make_hk(q.N, q.p, q.R);
    suite = {poly_trace(q.R), quadratic_trace(q.R),
             annulus_bump(0.3 * q.R, 0.95 * q.R)};
  } else if (kind == "st") {
    map = hs::make_st(q.N, m, q.R);
    suite = {poly_trace(q.R), quadratic_trace(q.R),
             annulus_bump(0.3 * q.R, 0.95 * q.R)};
  } else if (kind == "dim") {
    map = hs::make_dim(q.N, m, q.p);
    suite = {annulus_bump(0.3, 1.0), annulus_bump(0.5, 2.0), annulus_bump(1.0, 3.0)};
  } else {
    throw std::invalid_argument("unknown transform kind " + kind);
  }
  json results = json::array();
  double worst = 0.0;
  int idx = 0;
  // For the ST identity the weight exponent N is the critical integrable
  // choice for linearly vanishing test functions.
  double s_id = kind == "st" ? static_cast<double>(q.N) : q.s;
  for (const auto& u : suite) {
    for (auto sel : {hs::IdentitySelector::gradient, hs::IdentitySelector::weight}) {
      hs::ResidualReport r = hs::verify_norm_identity(map, u, sel, s_id);
      worst = std::max(worst, r.residual);
      results.push_back({{"function", idx},
                         {"identity", sel == hs::IdentitySelector::gradient
                                          ? "gradient"
                                          : "weight"},
                         {"lhs", r.lhs},
                         {"rhs", r.rhs},
                         {"residual", r.residual}});
    }
    ++idx;
  }
  json j = {{"config", echo_config("verify-transforms", c)},
            {"kind", kind},
            {"m", m},
            {"tol", tol},
            {"max_residual", worst},
            {"results", results}};
  emit_json(c, j);
  return worst <= tol ? 0 : 1;
}

int cmd_quotient(const Common& c, const std::string& family, double lambda,
                 double delta, double mu, double rho, double eps) {
  hs::ProblemParams q = params_of(c);
  hs::QuotientReport rep;
  if (family == "W") {
    rep = hs::rayleigh_quotient(hs::make_W(lambda, q),
                                hs::ProblemParams{q.N, q.p, q.s, q.R, 0.0,
                                                  hs::kInfinity});
  } else if (family == "U") {
    hs::ProblemParams q1 = q;
    q1.a = 1.0;
    rep = hs::rayleigh_quotient(hs::make_U(lambda, q1), q1);
  } else if (family == "power") {
    rep = hs::rayleigh_quotient(hs::truncated_power(delta, q), q);
  } else if (family == "bubble") {
    rep = hs::rayleigh_quotient(hs::truncated_bubble(mu, q), q);
  } else if (family == "bump-cone" || family == "bump-smooth" ||
             family == "bump-bubble") {
    hs::TrialFamily fam = family == "bump-cone" ? hs::TrialFamily::bump_cone
                          : family == "bump-smooth"
                              ? hs::TrialFamily::bump_smooth
                              : hs::TrialFamily::bump_bubble;
    if (rho <= 0.0) rho = hs::bump_center(eps, q);
    rep = hs::bump_trial_quotient(q, fam, rho, eps, mu);
  } else {
    throw std::invalid_argument("unknown trial family " + family);
  }
  json j;
  hs::to_json(j, rep);
  j["config"] = echo_config("quotient", c);
  j["family"] = family;
  emit_json(c, j);
  return 0;
}

int cmd_minimize_radial(const Common& c, int cells, int steps,
                        const std::string& start, const std::string& save) {
  hs::ProblemParams q = params_of(c);
  hs::FlowOptions opt;
  opt.cells = cells;
  opt.max_steps = steps;
  hs::MinimizeResult res;
  if (start == "generic") {
    res = hs::minimize_radial(q, opt);
  } else if (start == "extremal") {
    hs::ProblemParams q1 = q;
    q1.a = 1.0;
    res = hs::minimize_radial(q, hs::make_U(1.0, q1), opt);
  } else {
    throw std::invalid_argument("unknown start " + start);
  }
  if (!save.empty()) res.minimizer.save_csv(save);
  json j;
  hs::to_json(j, res);
  j["config"] = echo_config("minimize-radial", c);
  j["best_constant"] = hs::hardy_sobolev_constant(q);
  emit_json(c, j);
  return 0;
}

int cmd_break_scan(const Common& c, const std::string& grid) {
  hs::ProblemParams q = params_of(c);
  std::vector<double> a_grid = parse_grid(grid);
  std::vector<hs::AxisymFunction> suite = {
      hs::as_axisym(poly_trace(q.R)),
      hs::as_axisym(hs::truncated_bubble(0.3 * q.R, q)),
      hs::boundary_bump(0.1 * q.R, hs::BumpProfile::cone, q)};
  hs::MonotonicityReport rep = hs::monotonicity_scan(suite, q, a_grid);
  if (c.format == "csv") {
    std::ostringstream out;
    out << "function,a,quotient\n";
    out.precision(12);
    for (size_t i = 0; i < rep.quotients.size(); ++i)
      for (size_t j = 0; j < a_grid.size(); ++j)
        out << i << "," << a_grid[j] << "," << rep.quotients[i][j] << "\n";
    emit(c, out.str());
  } else {
    json j = {{"config", echo_config("break-scan", c)},
              {"a_grid", rep.a_grid},
              {"quotients", rep.quotients},
              {"all_nonincreasing", rep.all_nonincreasing}};
    emit_json(c, j);
  }
  return rep.all_nonincreasing ? 0 : 1;
}

int cmd_a_star(const Common& c, const std::string& grid, double margin,
               int budget) {
  hs::ProblemParams q = params_of(c);
  std::vector<double> a_grid = parse_grid(grid);
  if (margin <= 0.0) margin = 0.01 * hs::hardy_sobolev_constant(q);
  hs::AStarReport rep =
      hs::estimate_a_star_upper(q, a_grid, margin, hs::TrialFamily::bump_cone,
                                budget);
  json j = {{"config", echo_config("a-star", c)},
            {"radial_level", rep.radial_level},
            {"margin", margin},
            {"a_grid", rep.a_grid},
            {"best", rep.best}};
  if (std::isfinite(rep.a_hat)) {
    j["a_hat"] = rep.a_hat;
    json w;
    hs::to_json(w, rep.witness);
    j["witness"] = w;
  } else {
    j["a_hat"] = nullptr;
    j["note"] = "no witness found on the grid";
  }
  emit_json(c, j);
  return 0;
}

int cmd_decay_fit(Common c, int k_lo, int k_hi) {
  c.a = 1.0;
  hs::ProblemParams q = params_of(c);
  std::vector<double> eps;
  for (int k = k_lo; k <= k_hi; ++k) eps.push_back(q.R * std::pow(2.0, -k));
  hs::DecayFit fit = hs::decay_fit(q, eps);
  double expected = (q.N - 1.0) * (q.p - q.s) / (q.N - q.s);
  json j = {{"config", echo_config("decay-fit", c)},
            {"eps", fit.eps},
            {"quotient", fit.quotient},
            {"slope", fit.slope},
            {"intercept", fit.intercept},
            {"expected_slope", expected}};
  emit_json(c, j);
  return std::abs(fit.slope - expected) <= 0.05 ? 0 : 1;
}

int cmd_dim_limit(const Common& c, const std::string& grid) {
  std::vector<double> m_grid = parse_grid(grid);
  hs::LimitCurve curve = hs::dimension_limit_curve(m_grid, c.N, c.p);
  if (c.format == "csv") {
    std::ostringstream out;
    out << "m,c,gap\n";
    out.precision(12);
    for (size_t i = 0; i < curve.m.size(); ++i)
      out << curve.m[i] << "," << curve.value[i] << "," << curve.gap[i] << "\n";
    emit(c, out.str());
  } else {
    json j = {{"config", echo_config("dim-limit", c)},
              {"m", curve.m},
              {"c", curve.value},
              {"target", curve.target},
              {"gap", curve.gap}};
    emit_json(c, j);
  }
  return 0;
}

int cmd_scaling_scan(const Common& c, const std::string& kind, int k_max) {
  hs::ProblemParams q = params_of(c);
  hs::AxisymFunction v = angular_test();
  if (hs::angular_content(v, q) <= 0.0)
    throw std::runtime_error("test function has no angular content");
  std::vector<double> lambdas;
  hs::ScalingKind sk;
  if (kind == "n") {
    sk = hs::ScalingKind::scale_n;
    for (int k = 0; k <= k_max; ++k) lambdas.push_back(std::pow(2.0, -k));
  } else if (kind == "p") {
    sk = hs::ScalingKind::scale_p;
    for (int k = 0; k <= k_max; ++k) lambdas.push_back(std::pow(2.0, k));
    lambdas.push_back(hs::kInfinity);
  } else {
    throw std::invalid_argument("scaling kind must be n or p");
  }
  std::vector<hs::CurvePoint> curve = hs::scaled_energy_curve(sk, v, lambdas, q);
  if (c.format == "csv") {
    std::ostringstream out;
    out << "lambda,energy,error\n";
    out.precision(12);
    for (const auto& pt : curve)
      out << pt.lambda << "," << pt.energy << "," << pt.error << "\n";
    emit(c, out.str());
  } else {
    json arr = json::array();
    for (const auto& pt : curve)
      arr.push_back({{"lambda", pt.lambda}, {"energy", pt.energy},
                     {"error", pt.error}});
    json j = {{"config", echo_config("scaling-scan", c)},
              {"kind", kind},
              {"curve", arr}};
    emit_json(c, j);
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted Hardy-Sobolev minimization laboratory"};
  app.require_subcommand(1);

  Common c;
  std::string tf_kind = "ioku", family = "W", start = "generic", save;
  std::string a_grid = "0.55,0.6,0.65,0.7,0.75,0.8,0.85,0.9,0.95";
  std::string break_grid = "0,0.25,0.5,0.75,1";
  std::string m_grid = "10,100,1000,10000,100000,1000000";
  std::string scan_kind = "p";
  int tf_m = 5, cells = 2000, steps = 5000, budget = 2000, k_lo = 3, k_hi = 8,
      k_max = 6;
  double tf_tol = 1e-6, lambda = 1.0, delta = 0.1, mu = 1.0, rho = 0.0,
         eps = 0.1, margin = -1.0;

  auto* constants = app.add_subcommand("constants", "derived constants");
  add_common(constants, c);

  auto* vt = app.add_subcommand("verify-transforms", "norm identity residuals");
  add_common(vt, c);
  vt->add_option("--kind", tf_kind, "ioku | hk | st | dim");
  vt->add_option("--m", tf_m, "target dimension (st/dim)");
  vt->add_option("--tol", tf_tol, "residual tolerance");

  auto* quo = app.add_subcommand("quotient", "evaluate one trial quotient");
  add_common(quo, c);
  quo->add_option("--family", family,
                  "W | U | power | bubble | bump-cone | bump-smooth | bump-bubble");
  quo->add_option("--lambda", lambda, "extremal scale");
  quo->add_option("--delta", delta, "power trial offset");
  quo->add_option("--mu", mu, "bubble scale");
  quo->add_option("--rho", rho, "bump center radius (0 = R - 2 eps)");
  quo->add_option("--eps", eps, "bump radius");

  auto* mr = app.add_subcommand("minimize-radial", "radial gradient flow");
  add_common(mr, c);
  mr->add_option("--cells", cells, "mesh cells");
  mr->add_option("--steps", steps, "step budget");
  mr->add_option("--start", start, "generic | extremal");
  mr->add_option("--save", save, "write minimizer CSV here");

  auto* bs = app.add_subcommand("break-scan", "quotient monotonicity in a");
  add_common(bs, c);
  bs->add_option("--a-grid", break_grid, "comma-separated a values");

  auto* as = app.add_subcommand("a-star", "symmetry-breaking threshold bound");
  add_common(as, c);
  as->add_option("--a-grid", a_grid, "ascending a values in (threshold, 1)");
  as->add_option("--margin", margin, "witness margin (<= 0: 1% of the level)");
  as->add_option("--budget", budget, "search evaluations per grid point");

  auto* df = app.add_subcommand("decay-fit", "boundary-bump decay slope (a=1)");
  add_common(df, c);
  df->add_option("--k-lo", k_lo, "smallest dyadic level");
  df->add_option("--k-hi", k_hi, "largest dyadic level");

  auto* dl = app.add_subcommand("dim-limit", "dimension-limit constant curve");
  add_common(dl, c);
  dl->add_option("--m-grid", m_grid, "comma-separated m values");

  auto* ss = app.add_subcommand("scaling-scan", "energy along a scaling");
  add_common(ss, c);
  ss->add_option("--kind", scan_kind, "n | p");
  ss->add_option("--k-max", k_max, "dyadic levels");

  try {
    app.parse(argc, argv);
    if (constants->parsed()) return cmd_constants(c);
    if (vt->parsed()) return cmd_verify_transforms(c, tf_kind, tf_m, tf_tol);
    if (quo->parsed()) return cmd_quotient(c, family, lambda, delta, mu, rho, eps);
    if (mr->parsed()) return cmd_minimize_radial(c, cells, steps, start, save);
    if (bs->parsed()) return cmd_break_scan(c, break_grid);
    if (as->parsed()) return cmd_a_star(c, a_grid, margin, budget);
    if (df->parsed()) return cmd_decay_fit(c, k_lo, k_hi);
    if (dl->parsed()) return cmd_dim_limit(c, m_grid);
    if (ss->parsed()) return cmd_scaling_scan(c, scan_kind, k_max);
    return 2;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
