#include <doctest.h>

#include "hs/funcspace.hpp"
#include "hs/functionals.hpp"
#include "hs/scalings.hpp"
#include "hs/transforms.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace hs;

namespace {

const ProblemParams q321{3, 2.0, 1.0};

RadialFunction quadratic_cap() {
  RadialFunction u;
  u.value = [](double r) { return r < 1.0 ? (1.0 - r) * (1.0 - r) : 0.0; };
  u.deriv = [](double r) { return r < 1.0 ? -2.0 * (1.0 - r) : 0.0; };
  u.support_radius = 1.0;
  u.boundary_exponent = 2.0;
  return u;
}

AxisymFunction angular_test() {
  AxisymFunction v;
  auto g = [](double r) {
    return (r > 0.2 && r < 0.9) ? (r - 0.2) * (0.9 - r) : 0.0;
  };
  auto dg = [](double r) { return (r > 0.2 && r < 0.9) ? (1.1 - 2.0 * r) : 0.0; };
  v.value = [g](double r, double th) { return g(r) * std::cos(th); };
  v.dr = [dg](double r, double th) { return dg(r) * std::cos(th); };
  v.dtheta = [g](double r, double th) { return -g(r) * std::sin(th); };
  v.support_radius = 0.9;
  return v;
}

} // namespace

TEST_CASE("admissible lambda ranges are enforced") {
  ProblemParams q = q321;
  q.a = 0.5;
  CHECK_NOTHROW(validate_scaling({ScalingKind::radial_map, 2.0, 0.5}, q));
  CHECK_THROWS_AS(validate_scaling({ScalingKind::radial_map, 0.5, 0.5}, q),
                  std::domain_error);
  CHECK_THROWS_AS(validate_scaling({ScalingKind::scale_p, 0.5, 0.5}, q),
                  std::domain_error);
  CHECK_THROWS_AS(validate_scaling({ScalingKind::scale_n, 2.0, 0.0, 2.0}, q),
                  std::domain_error);
  CHECK_THROWS_AS(validate_scaling({ScalingKind::usual, -1.0}, q),
                  std::domain_error);
}

TEST_CASE("lambda = 1 is the identity for every kind") {
  RadialFunction u = quadratic_cap();
  for (ScalingKind k : {ScalingKind::usual, ScalingKind::radial_map,
                        ScalingKind::scale_n, ScalingKind::scale_p}) {
    ScalingSpec sc{k, 1.0, 0.5, 2.0};
    RadialFunction v = apply_scaling(sc, u, q321);
    for (double r : {0.1, 0.6, 0.95}) {
      CHECK(v.value(r) == doctest::Approx(u.value(r)).epsilon(1e-12));
      CHECK(v.deriv(r) == doctest::Approx(u.deriv(r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("support-shrinking scaling with a = 0 is the usual scaling") {
  RadialFunction u = quadratic_cap();
  for (double lam : {2.0, 5.0}) {
    RadialFunction nu = apply_scaling({ScalingKind::radial_map, lam, 0.0}, u, q321);
    RadialFunction us = apply_scaling({ScalingKind::usual, lam}, u, q321);
    for (double r : {0.05, 0.12, 0.19}) {  // inside the shrunken support
      CHECK(nu.value(r) == doctest::Approx(us.value(r)).epsilon(1e-12));
    }
  }
}

TEST_CASE("shrunken support radius matches the closed formula") {
  for (double lam : {2.0, 4.0}) {
    for (double a : {0.5, 1.0}) {
      ProblemParams q = q321;
      q.a = a;
      ScalingSpec sc{ScalingKind::radial_map, lam, a};
      double al = (q.N - q.p) / (q.p - 1.0);
      double expect =
          q.R * std::pow(std::pow(lam, al) * (1.0 - a) + a, -1.0 / al);
      double rt = scaled_support_radius(sc, q);
      CHECK(rt == doctest::Approx(expect).epsilon(1e-13));
      // the scaled function really vanishes beyond Rtilde
      RadialFunction v = apply_scaling(sc, quadratic_cap(), q);
      CHECK(v.value(rt * 1.0000001) == 0.0);
      CHECK(std::abs(v.value(rt * 0.98)) > 0.0);
    }
  }
}

TEST_CASE("angular content detector") {
  CHECK(angular_content(as_axisym(quadratic_cap()), q321) <= 1e-14);
  CHECK(angular_content(angular_test(), q321) > 0.01);
}

TEST_CASE("compression scaling: radial functions keep constant energy") {
  std::vector<double> lambdas{1.0, 0.5, 0.25, 0.125};
  auto curve = scaled_energy_curve(ScalingKind::scale_n, as_axisym(quadratic_cap()),
                                   lambdas, q321);
  REQUIRE(curve.size() == lambdas.size());
  for (const auto& pt : curve) {
    CHECK(std::abs(pt.energy - curve[0].energy) <= 1e-8 * curve[0].energy);
  }
}

TEST_CASE("compression scaling: angular content forces energy growth") {
  std::vector<double> lambdas;
  for (int k = 0; k <= 6; ++k) lambdas.push_back(std::pow(2.0, -k));
  auto curve =
      scaled_energy_curve(ScalingKind::scale_n, angular_test(), lambdas, q321);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    CHECK(curve[i].energy > curve[i - 1].energy);
  }
}

TEST_CASE("stretching scaling: energy approaches the limit integral") {
  ProblemParams q{4, 2.0, 1.0, 1.0, 0.5};
  std::vector<double> lambdas;
  for (int k = 0; k <= 6; ++k) lambdas.push_back(std::pow(2.0, k));
  lambdas.push_back(kInfinity);
  auto curve = scaled_energy_curve(ScalingKind::scale_p, angular_test(), lambdas, q);
  double limit = curve.back().energy;
  CHECK(std::isfinite(limit));
  double prev_gap = kInfinity;
  for (std::size_t i = 0; i + 1 < curve.size(); ++i) {
    double gap = std::abs(curve[i].energy - limit) / limit;
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}
