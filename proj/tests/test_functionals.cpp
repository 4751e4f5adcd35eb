#include <doctest.h>

#include "hs/funcspace.hpp"
#include "hs/functionals.hpp"
#include "hs/params.hpp"
#include "hs/scalings.hpp"
#include "hs/transforms.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace hs;

namespace {

const ProblemParams q321{3, 2.0, 1.0};

RadialFunction one_minus_r() {
  RadialFunction u;
  u.value = [](double r) { return r < 1.0 ? 1.0 - r : 0.0; };
  u.deriv = [](double r) { return r < 1.0 ? -1.0 : 0.0; };
  u.support_radius = 1.0;
  return u;
}

RadialFunction quadratic_cap() {
  RadialFunction u;
  u.value = [](double r) { return r < 1.0 ? (1.0 - r) * (1.0 - r) : 0.0; };
  u.deriv = [](double r) { return r < 1.0 ? -2.0 * (1.0 - r) : 0.0; };
  u.support_radius = 1.0;
  u.boundary_exponent = 2.0;
  return u;
}

std::vector<RadialFunction> radial_suite() {
  RadialFunction cap;
  cap.value = [](double r) { return r < 1.0 ? 1.0 - r * r : 0.0; };
  cap.deriv = [](double r) { return r < 1.0 ? -2.0 * r : 0.0; };
  cap.support_radius = 1.0;
  return {one_minus_r(), quadratic_cap(), cap};
}

} // namespace

TEST_CASE("potential: weight limit cases and interior minimum") {
  ProblemParams q0 = q321;  // a = 0
  for (double r : {0.1, 0.5, 0.99}) {
    CHECK(potential(r, q0) == doctest::Approx(1.0 / r).epsilon(1e-14));
  }
  for (double a : {0.2, 0.6, 0.9}) {
    ProblemParams qa = q321;
    qa.a = a;
    for (double r : {0.15, 0.45, 0.85}) {
      CHECK(potential(r, qa) >= std::pow(r, -qa.s));
    }
  }
  // golden-section minimum of V_a matches the closed-form critical radius
  ProblemParams qa = q321;
  qa.a = 0.7;
  double lo = 1e-6, hi = 1.0 - 1e-9;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  for (int it = 0; it < 200; ++it) {
    if (potential(c, qa) < potential(d, qa)) {
      hi = d;
    } else {
      lo = c;
    }
    c = hi - gr * (hi - lo);
    d = lo + gr * (hi - lo);
  }
  CHECK(0.5 * (lo + hi) == doctest::Approx(critical_radius(qa)).epsilon(1e-8));
}

TEST_CASE("Dirichlet energy: pinned values and usual-scaling invariance") {
  QuadratureSpec spec;
  CHECK(dirichlet_energy(one_minus_r(), q321, spec).value ==
        doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-10));
  // whole-space extremal (s = 1): ||grad W_1||_2^2 = omega * B(3,1) = 4 pi / 3
  RadialFunction w1 = make_W(1.0, q321);
  ProblemParams qR{3, 2.0, 1.0, kInfinity};
  CHECK(dirichlet_energy(w1, qR, spec).value ==
        doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-8));
  // usual scaling leaves the energy unchanged
  for (double lam : {0.5, 2.0}) {
    ScalingSpec sc{ScalingKind::usual, lam};
    RadialFunction wl = apply_scaling(sc, w1, qR);
    CHECK(dirichlet_energy(wl, qR, spec).value ==
          doctest::Approx(dirichlet_energy(w1, qR, spec).value).epsilon(1e-8));
  }
}

TEST_CASE("weighted norm: Beta-oracle value, zero function, monotone in a") {
  QuadratureSpec spec;
  ProblemParams qR{3, 2.0, 1.0, kInfinity};
  RadialFunction w1 = make_W(1.0, q321);
  // int W_1^4 / |x| dx = omega * B(2,2) = 2 pi / 3
  CHECK(weighted_norm(w1, qR, spec).value ==
        doctest::Approx(2.0 * std::numbers::pi / 3.0).epsilon(1e-8));

  RadialFunction zero;
  zero.value = [](double) { return 0.0; };
  zero.deriv = [](double) { return 0.0; };
  zero.support_radius = 1.0;
  CHECK(weighted_norm(zero, q321, spec).value == doctest::Approx(0.0));

  double prev = 0.0;
  for (double a : {0.0, 0.3, 0.6, 0.9}) {
    ProblemParams qa = q321;
    qa.a = a;
    double v = weighted_norm(quadratic_cap(), qa, spec).value;
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("Rayleigh quotient: homogeneity and extremal invariance") {
  RadialFunction u = quadratic_cap();
  double base = rayleigh_quotient(u, q321).quotient;
  for (double cmul : {0.1, 10.0}) {
    RadialFunction cu = u;
    cu.value = [cmul, &u](double r) { return cmul * u.value(r); };
    cu.deriv = [cmul, &u](double r) { return cmul * u.deriv(r); };
    CHECK(rayleigh_quotient(cu, q321).quotient ==
          doctest::Approx(base).epsilon(1e-12));
  }

  // R^N quotient of W_lambda independent of lambda, equal to C_{3,2,1}
  ProblemParams qR{3, 2.0, 1.0, kInfinity};
  std::vector<double> vals;
  for (double lam : {0.5, 1.0, 2.0}) {
    vals.push_back(rayleigh_quotient(make_W(lam, q321), qR).quotient);
  }
  for (double v : vals) {
    CHECK(std::abs(v - vals[0]) <= 1e-6 * vals[0]);
    CHECK(v == doctest::Approx(oracle::kC321).epsilon(1e-4));
  }

  // ball extremal at a = 1 attains the same constant
  ProblemParams q1 = q321;
  q1.a = 1.0;
  for (double lam : {0.5, 1.0, 2.0}) {
    CHECK(rayleigh_quotient(make_U(lam, q321), q1).quotient ==
          doctest::Approx(oracle::kC321).epsilon(1e-4));
  }
}

TEST_CASE("improved inequality holds for the radial suite at a = 1") {
  ProblemParams q1 = q321;
  q1.a = 1.0;
  for (const auto& u : radial_suite()) {
    QuotientReport rep = rayleigh_quotient(u, q1);
    REQUIRE(rep.weighted > 0.0);
    CHECK(rep.quotient >= oracle::kC321 * (1.0 - 1e-8));
  }
}

TEST_CASE("support-shrinking scaling leaves the a = 1 quotient invariant") {
  ProblemParams q1 = q321;
  q1.a = 1.0;
  RadialFunction u = quadratic_cap();
  double base = rayleigh_quotient(u, q1).quotient;
  for (double lam : {2.0, 5.0}) {
    ScalingSpec sc{ScalingKind::radial_map, lam, 1.0};
    RadialFunction ul = apply_scaling(sc, u, q1);
    CHECK(rayleigh_quotient(ul, q1).quotient ==
          doctest::Approx(base).epsilon(1e-6));
  }
}
