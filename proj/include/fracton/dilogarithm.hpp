#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "fracton/errors.hpp"
#include "fracton/quadrature.hpp"

namespace fracton {

inline constexpr double pi_sq_over_6 =
    std::numbers::pi * std::numbers::pi / 6.0;

namespace detail {

/// Dilogarithm series sum x^k/k^2, intended for 0 <= x <= 1/2 where it
/// converges geometrically (about 52 terms at the midpoint).
inline double li2_series(double x) {
  double sum = 0.0;
  double power = 1.0;
  for (int k = 1; k <= 200; ++k) {
    power *= x;
    const double term = power / (static_cast<double>(k) * k);
    sum += term;
    if (term < 1e-18 * (sum + 1e-300)) break;
  }
  return sum;
}

}  // namespace detail

/// Real dilogarithm Li2 on [0,1], by series below 1/2 and the Euler
/// reflection Li2(x) = pi^2/6 - ln(x)ln(1-x) - Li2(1-x) above.
inline double li2(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw domain_error("li2 implemented on [0,1], got " + std::to_string(x));
  if (x == 1.0) return pi_sq_over_6;
  if (x <= 0.5) return detail::li2_series(x);
  return pi_sq_over_6 - std::log(x) * std::log1p(-x) -
         detail::li2_series(1.0 - x);
}

/// Rogers dilogarithm L(x) = Li2(x) + ln(x)ln(1-x)/2 on [0,1], evaluated
/// through its own reflection L(x) = L(1) - L(1-x) above the midpoint.
/// L(0) = 0, L(1/2) = pi^2/12, L(1) = pi^2/6; monotone increasing.
inline double rogers_dilog(double x) {
  if (!(x >= 0.0 && x <= 1.0))
    throw domain_error("Rogers dilogarithm is defined on [0,1], got " +
                       std::to_string(x));
  if (x == 0.0) return 0.0;
  if (x == 1.0) return pi_sq_over_6;
  if (x > 0.5) return pi_sq_over_6 - rogers_dilog(1.0 - x);
  return detail::li2_series(x) + 0.5 * std::log(x) * std::log1p(-x);
}

/// The same function from its integral form,
///   L(x) = -1/2 * integral 0..x of [ln(1-y)/y + ln(y)/(1-y)] dy,
/// by adaptive quadrature. Kept as an independent route for cross-checks;
/// the integrand's endpoint log singularities are integrable.
inline double rogers_dilog_integral(double x, double abs_tol = 1e-12) {
  if (!(x >= 0.0 && x <= 1.0))
    throw domain_error("Rogers dilogarithm is defined on [0,1], got " +
                       std::to_string(x));
  if (x == 0.0) return 0.0;
  const auto integrand = [](double y) {
    // deep refinement may round a node onto the singular endpoint
    if (y >= 1.0) y = std::nextafter(1.0, 0.0);
    // above the midpoint y-1 is exact, so log1p(y-1) evaluates ln(y) there
    // without the cancellation log(y) would suffer
    const double log_y = y > 0.5 ? std::log1p(y - 1.0) : std::log(y);
    return std::log1p(-y) / y + log_y / (1.0 - y);
  };
  const quad_result q = integrate(integrand, 0.0, x, 2.0 * abs_tol, 4000);
  if (!q.converged)
    throw convergence_error(
        "Rogers dilogarithm quadrature did not reach tolerance",
        0.5 * q.abs_error);
  return -0.5 * q.value;
}

}  // namespace fracton
