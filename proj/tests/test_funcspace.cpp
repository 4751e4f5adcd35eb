#include <doctest.h>

#include "hs/funcspace.hpp"
#include "hs/functionals.hpp"
#include "hs/special.hpp"
#include "hs/transforms.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

using namespace hs;

namespace {
const ProblemParams q321{3, 2.0, 1.0};
}

TEST_CASE("whole-space extremal profile: pinned values and lambda scaling") {
  CHECK(eval_W(1.0, 0.0, q321) == doctest::Approx(1.0).epsilon(1e-14));
  // (3,2,1): W_1(t) = 1/(1+t)
  CHECK(eval_W(1.0, 1.0, q321) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(eval_W(1.0, 3.0, q321) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(eval_W_deriv(1.0, 1.0, q321) == doctest::Approx(-0.25).epsilon(1e-12));
  // W_lambda(t) = lambda^{(N-p)/p} W_1(lambda t)
  ProblemParams q{4, 3.0, 1.5};
  for (double lam : {0.3, 1.7, 6.0}) {
    for (double t : {0.2, 0.9, 4.0}) {
      double lhs = eval_W(lam, t, q);
      double rhs = std::pow(lam, (q.N - q.p) / q.p) * eval_W(1.0, lam * t, q);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
    }
  }
}

TEST_CASE("ball extremal: origin value, boundary decay, transform composition") {
  for (double lam : {0.5, 1.0, 2.0}) {
    CHECK(eval_U(lam, 0.0, q321) ==
          doctest::Approx(std::pow(lam, 0.5)).epsilon(1e-13));
  }
  // strictly decreasing to zero toward the boundary
  double prev = 1.0;
  for (int k = 2; k <= 6; ++k) {
    double v = eval_U(1.0, 1.0 - std::pow(10.0, -k), q321);
    CHECK(v < prev);
    CHECK(v > 0.0);
    prev = v;
  }
  CHECK(prev < 1e-1);
  CHECK_THROWS(eval_U(1.0, 1.0, q321));

  // U^lambda is W_lambda transported through the T = infinity map
  TransformMap map = make_ioku(3, 2.0, 1.0, kInfinity);
  for (double lam : {0.5, 2.0}) {
    for (double r : {0.11, 0.37, 0.52, 0.83, 0.97}) {
      CHECK(eval_U(lam, r, q321) ==
            doctest::Approx(eval_W(lam, map.forward(r), q321)).epsilon(1e-12));
    }
  }
  // (3,2,1), lambda = 1: U^1(r) = 1 - r exactly
  for (double r : {0.1, 0.5, 0.9}) {
    CHECK(eval_U(1.0, r, q321) == doctest::Approx(1.0 - r).epsilon(1e-13));
  }
}

TEST_CASE("boundary bump: support, plateau, exact energy scaling") {
  double eps = 0.1;
  AxisymFunction u = boundary_bump(eps, BumpProfile::cone, q321);
  double rc = bump_center(eps, q321);
  CHECK(rc == doctest::Approx(1.0 - 2.0 * eps).epsilon(1e-14));
  // plateau on the inner half-ball (points along the axis)
  CHECK(u.value(rc, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(u.value(rc + 0.4 * eps, 0.0) == doctest::Approx(1.0).epsilon(1e-13));
  // zero outside the eps-ball
  CHECK(u.value(rc + 1.01 * eps, 0.0) == 0.0);
  CHECK(u.value(rc, 0.5) == 0.0);  // far off-axis in angle
  CHECK(u.value(0.2, 0.0) == 0.0);

  // ||grad u_eps||_p^p = eps^{N-p} E_v against direct axisymmetric quadrature
  double Ev = bump_profile_energy(BumpProfile::smooth, 3, 2.0);
  CHECK(Ev > 0.0);
  for (double e : {0.1, 0.05, 0.025}) {
    AxisymFunction ue = boundary_bump(e, BumpProfile::smooth, q321);
    double c = bump_center(e, q321);
    QuadratureSpec spec;
    spec.rel_tol = 1e-10;
    // Evaluate the global derivative fields, but integrate in spherical
    // coordinates centered at the bump (distance l, polar angle psi) so
    // the profile kinks at l = e/2, e lie on panel boundaries:
    //   dx = 2 pi l^2 sin(psi) dl dpsi,  r^2 = c^2 + l^2 + 2 c l cos(psi).
    auto shell = [&](double l) {
      auto g = [&](double psi) {
        double r = std::sqrt(c * c + l * l + 2.0 * c * l * std::cos(psi));
        double th = std::acos(std::clamp((c + l * std::cos(psi)) / r, -1.0, 1.0));
        double ur = ue.dr(r, th);
        double ut = ue.dtheta(r, th) / r;
        return (ur * ur + ut * ut) * std::sin(psi);
      };
      return integrate_radial(g, 0.0, std::numbers::pi, spec).value * l * l;
    };
    double direct = integrate_radial(shell, 0.0, 0.5 * e, spec).value +
                    integrate_radial(shell, 0.5 * e, e, spec).value;
    CHECK(2.0 * std::numbers::pi * direct == doctest::Approx(e * Ev).epsilon(1e-6));
  }
}

TEST_CASE("spherical q-average: radial, separable, and the norm identity") {
  // radial w -> W = |w|
  RadialFunction g;
  g.value = [](double r) { return (1.0 - r) * (2.0 + r); };
  g.deriv = [](double r) { return -2.0 * r - 1.0; };
  g.support_radius = 1.0;
  RadialFunction W = spherical_average(as_axisym(g), 4.0, 3);
  for (double r : {0.2, 0.6, 0.95}) {
    CHECK(W.value(r) == doctest::Approx(std::abs(g.value(r))).epsilon(1e-10));
  }

  // separable w = g(r) h(theta): W = g * mean-q of h
  double qexp = 4.0;
  AxisymFunction sep;
  sep.value = [&g](double r, double th) { return g.value(r) * (1.5 + std::cos(th)); };
  sep.dr = [&g](double r, double th) { return g.deriv(r) * (1.5 + std::cos(th)); };
  sep.dtheta = [&g](double r, double th) { return -g.value(r) * std::sin(th); };
  sep.support_radius = 1.0;
  RadialFunction Ws = spherical_average(sep, qexp, 3);
  IntegralResult hq = integrate_angular(
      [qexp](double th) { return std::pow(std::abs(1.5 + std::cos(th)), qexp); }, 3);
  double hmean = std::pow(hq.value / 2.0, 1.0 / qexp);  // /2 = angular mass, N=3
  for (double r : {0.3, 0.7}) {
    CHECK(Ws.value(r) == doctest::Approx(g.value(r) * hmean).epsilon(1e-9));
  }

  // int W^q f dx == int |w|^q f dx for a radial weight f
  auto f = [](double r) { return 1.0 / (1.0 + r); };
  IntegralResult lhs = integrate_radial(
      [&](double r) {
        return std::pow(Ws.value(r), qexp) * f(r) * r * r;
      },
      1e-12, 1.0);
  IntegralResult rhs = integrate_axisym(
      [&](double r, double th) {
        return std::pow(std::abs(sep.value(r, th)), qexp) * f(r);
      },
      3, 1e-12, 1.0);
  CHECK(sphere_area(3.0) * lhs.value == doctest::Approx(rhs.value).epsilon(1e-8));
}

TEST_CASE("grid functions: interpolation, derivative, csv round trip") {
  Eigen::VectorXd x = graded_nodes(60, 1.0, 2.0);
  REQUIRE(x.size() == 60);
  CHECK(x[x.size() - 1] == doctest::Approx(1.0).epsilon(1e-14));
  for (int i = 1; i < x.size(); ++i) CHECK(x[i] > x[i - 1]);
  CHECK(x[0] > 0.0);

  Eigen::VectorXd v(x.size());
  for (int i = 0; i < x.size(); ++i) v[i] = std::cos(x[i]);
  GridFunction gf(x, v, 2.0);
  CHECK(gf.value(0.5) == doctest::Approx(std::cos(0.5)).epsilon(1e-5));
  CHECK(gf.deriv(0.5) == doctest::Approx(-std::sin(0.5)).epsilon(1e-3));

  const char* path = "gridfn_roundtrip.csv";
  gf.save_csv(path);
  GridFunction back = GridFunction::load_csv(path);
  std::remove(path);
  REQUIRE(back.nodes().size() == gf.nodes().size());
  CHECK(back.grading() == doctest::Approx(2.0));
  for (int i = 0; i < x.size(); ++i) {
    CHECK(back.nodes()[i] == doctest::Approx(gf.nodes()[i]).epsilon(1e-14));
    CHECK(back.values()[i] == doctest::Approx(gf.values()[i]).epsilon(1e-14));
  }
}
