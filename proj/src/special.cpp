#include "hs/special.hpp"

#include <numbers>
#include <stdexcept>

namespace hs {

double log_sphere_area(double n) {
  if (n <= 0) throw std::domain_error("log_sphere_area: n must be positive");
  return std::log(2.0) + 0.5 * n * std::log(std::numbers::pi) - log_gamma(0.5 * n);
}

double sphere_area(double n) { return std::exp(log_sphere_area(n)); }

double beta_function(double a, double b) {
  if (a <= 0 || b <= 0) throw std::domain_error("beta_function: arguments must be positive");
  return std::exp(log_gamma(a) + log_gamma(b) - log_gamma(a + b));
}

double stirling_ratio(double t) {
  if (t <= 0) throw std::domain_error("stirling_ratio: t must be positive");
  double log_stirling = 0.5 * std::log(2.0 * std::numbers::pi) + (t - 0.5) * std::log(t) - t;
  return std::exp(log_gamma(t) - log_stirling);
}

} // namespace hs
