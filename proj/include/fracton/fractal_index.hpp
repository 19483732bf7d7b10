#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "fracton/distribution.hpp"
#include "fracton/errors.hpp"
#include "fracton/quadrature.hpp"

namespace fracton {

struct FractalIndex {
  double h;
  double value;               // in [0.5, 1] within the error estimate
  double abs_error_estimate;  // propagated quadrature estimate
};

/// Topological index of a universal class,
///   i_f = (6/pi^2) * integral over xi from 1 to infinity of (-ln Theta) dxi/xi,
/// made proper with u = 1/xi on (0,1). The integrand tends to 1 at u -> 0
/// and, for the bosonic border h = 2, carries an integrable logarithmic
/// singularity at u -> 1; open quadrature nodes never touch either endpoint.
inline FractalIndex fractal_index(class_param h, double abs_tol = 1e-9) {
  const double hv = h.value();
  const auto integrand = [hv](double u) {
    // deep refinement may round a node onto the singular endpoint
    if (u >= 1.0) u = std::nextafter(1.0, 0.0);
    // log(xi) = -log(u) keeps full precision where xi - 1 would cancel
    const double s = detail::solve_s_from_log_xi(hv, -std::log(u));
    return -detail::log_theta_from_s(s) / u;
  };
  const double scale = 6.0 / (std::numbers::pi * std::numbers::pi);
  const quad_result q = integrate(integrand, 0.0, 1.0, abs_tol / scale, 4000);
  if (!q.converged)
    throw convergence_error("fractal index quadrature for h=" +
                                std::to_string(hv) +
                                " did not reach the requested tolerance",
                            q.abs_error * scale);
  return {hv, scale * q.value, scale * q.abs_error};
}

}  // namespace fracton
