#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "fracton/dilogarithm.hpp"
#include "fracton/errors.hpp"
#include "fracton/fractal_index.hpp"

namespace fracton {

namespace detail {

inline double int_pow(double x, int n) {
  double out = 1.0;
  for (int i = 0; i < n; ++i) out *= x;
  return out;
}

}  // namespace detail

/// Root of x^nu + x = 1 in (0,1]; residual at the returned point is below
/// 1e-12. nu = 0 maps to x = 0 by continuity of the central charge (x^0 = 1
/// leaves 1 - x = 1, which has no root in (0,1)).
inline double solve_x_nu(int nu) {
  if (nu < 0) throw domain_error("nu must be nonnegative");
  if (nu == 0) return 0.0;
  if (nu == 1) return 0.5;
  // g(x) = x^nu + x - 1 is convex and increasing on (0,1): Newton from the
  // right endpoint descends monotonically onto the root
  double x = 1.0;
  double prev = 2.0;
  double g = 1.0;
  for (int it = 0; it < 200; ++it) {
    g = detail::int_pow(x, nu) + x - 1.0;
    const double slope = nu * detail::int_pow(x, nu - 1) + 1.0;
    const double next = x - g / slope;
    if (next == x) return x;
    if (next == prev) {
      // Oscillating between adjacent representable values: keep the better.
      const double g_next = detail::int_pow(next, nu) + next - 1.0;
      return std::abs(g_next) < std::abs(g) ? next : x;
    }
    prev = x;
    x = next;
  }
  throw convergence_error("root of x^nu + x = 1 stalled for nu=" +
                              std::to_string(nu),
                          std::abs(g));
}

/// Central charge of the nu-th level by either route. x_root and
/// value_dilog are always present; value_index is filled by the
/// index route, which needs nu >= 1.
struct CentralCharge {
  int nu = 0;
  double x_root = 0.0;
  double value_dilog = 0.0;
  std::optional<double> value_index;
};

/// c = L(x_nu)/L(1) with x_nu the root of x^nu + x = 1.
inline CentralCharge central_charge_dilog(int nu) {
  if (nu < 0) throw domain_error("nu must be nonnegative");
  CentralCharge c;
  c.nu = nu;
  c.x_root = solve_x_nu(nu);
  c.value_dilog = rogers_dilog(c.x_root) / pi_sq_over_6;
  return c;
}

/// Class dimension holding the integer level nu under the border
/// convention: odd levels join the fermionic class h = 1, even the bosonic
/// h = 2; fractional levels 1/nu fall in the first band, h = 2 - 1/nu.
inline double integer_class_dimension(int nu) {
  if (nu < 1) throw domain_error("integer levels start at 1");
  return nu % 2 == 1 ? 1.0 : 2.0;
}

/// Difference-of-indices route:
///   even nu: c = i_f[h(nu)] -   i_f[h(1/nu)]
///   odd nu:  c = 2 i_f[h(nu)] - i_f[h(1/nu)]
/// Both indices come from fractal_index quadrature at abs_tol. The result
/// also carries the dilogarithm-route value for side-by-side comparison;
/// the two routes are not expected to agree (they sum to 1 for nu >= 1).
inline CentralCharge central_charge_index(int nu, double abs_tol = 1e-9) {
  if (nu < 1) throw domain_error("the index route needs nu >= 1");
  const double h_nu = integer_class_dimension(nu);
  const double h_inv = nu == 1 ? 1.0 : 2.0 - 1.0 / nu;
  const double i_nu = fractal_index(h_nu, abs_tol).value;
  const double i_inv = fractal_index(h_inv, abs_tol).value;
  CentralCharge c = central_charge_dilog(nu);
  c.value_index = nu % 2 == 0 ? i_nu - i_inv : 2.0 * i_nu - i_inv;
  return c;
}

}  // namespace fracton
