#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "fracton/errors.hpp"

namespace fracton {

/// Hausdorff dimension of a universal class, as a floating-point parameter.
class class_param {
 public:
  class_param(double h) : h_(h) {  // NOLINT: implicit
    if (!(h >= 1.0 && h <= 2.0))
      throw domain_error("class dimension must lie in [1,2], got " +
                         std::to_string(h));
  }
  double value() const noexcept { return h_; }

 private:
  double h_;
};

/// Fugacity xi = exp((eps - mu)/KT) > 0. The additional bosonic constraint
/// xi > 1 depends on the class and is enforced by the solver.
class fugacity {
 public:
  fugacity(double xi) : xi_(xi) {  // NOLINT: implicit
    if (!(xi > 0.0) || !std::isfinite(xi))
      throw domain_error("fugacity must be positive and finite, got " +
                         std::to_string(xi));
  }
  double value() const noexcept { return xi_; }

 private:
  double xi_;
};

namespace detail {

inline double softplus(double s) {
  return s > 0 ? s + std::log1p(std::exp(-s)) : std::log1p(std::exp(s));
}

inline double logistic(double s) {
  if (s >= 0) return 1.0 / (1.0 + std::exp(-s));
  const double e = std::exp(s);
  return e / (1.0 + e);
}

/// Solves (h-1)*ln(Y-1) + (2-h)*ln(Y-2) = log_xi for s = ln(Y-2).
///
/// In s the left side is (h-1)*softplus(s) + (2-h)*s: convex and strictly
/// increasing, so a Newton step from anywhere lands right of the root and
/// descends monotonically afterwards. Working in s keeps Y-2 exact when it
/// underflows Y itself (deep degenerate regime).
inline double solve_s_from_log_xi(double h, double log_xi) {
  if (h == 1.0) return log_xi;  // Y = xi + 2
  if (h == 2.0) {
    // Y = xi + 1; the bosonic branch only reaches Y > 2 for xi > 1
    if (!(log_xi > 0))
      throw domain_error(
          "unphysical fugacity: the bosonic class requires xi > 1");
    return log_xi + std::log1p(-std::exp(-log_xi));
  }
  const double tol = 1e-12 * std::max(1.0, std::abs(log_xi));
  double s = log_xi >= 0 ? log_xi : log_xi / (2.0 - h);  // asymptotic guesses
  double residual = 0.0;
  for (int it = 0; it < 200; ++it) {
    residual = (h - 1.0) * softplus(s) + (2.0 - h) * s - log_xi;
    if (std::abs(residual) <= tol) return s;
    const double slope = (h - 1.0) * logistic(s) + (2.0 - h);
    s -= residual / slope;
  }
  throw convergence_error(
      "fractal distribution solve stalled at h=" + std::to_string(h) +
          ", ln(xi)=" + std::to_string(log_xi),
      std::abs(residual));
}

inline double solve_s(class_param h, fugacity xi) {
  return solve_s_from_log_xi(h.value(), std::log(xi.value()));
}

/// ln Theta = ln(sigma(s)) for s = ln(Y-2); stable for very negative s.
inline double log_theta_from_s(double s) { return -softplus(-s); }

}  // namespace detail

/// The auxiliary root Y > 2 of (Y-1)^(h-1) * (Y-2)^(2-h) = xi.
inline double solve_Y(class_param h, fugacity xi) {
  return 2.0 + std::exp(detail::solve_s(h, xi));
}

/// Mean occupation n = 1/(Y - h). Recovers 1/(xi+1) for h=1, 1/(xi-1) for
/// h=2 and 1/sqrt(1/4 + xi^2) for the self-dual class h=3/2.
inline double occupation(class_param h, fugacity xi) {
  return 1.0 / (2.0 - h.value() + std::exp(detail::solve_s(h, xi)));
}

/// Single-particle partition function Theta = (Y-2)/(Y-1), in (0,1).
inline double partition_theta(class_param h, fugacity xi) {
  return detail::logistic(detail::solve_s(h, xi));
}

/// ln Theta without forming Theta; keeps precision when Theta underflows.
inline double log_partition_theta(class_param h, fugacity xi) {
  return detail::log_theta_from_s(detail::solve_s(h, xi));
}

/// Free energy per quantum state, F = KT * ln Theta; negative in-domain.
inline double free_energy(class_param h, fugacity xi, double kT) {
  if (!(kT > 0)) throw domain_error("temperature scale kT must be positive");
  return kT * log_partition_theta(h, xi);
}

/// Occupation recovered from the partition function as the logarithmic
/// derivative xi * d(ln Theta)/d(xi), by a central difference in ln(xi).
/// The step eps^(1/3) balances truncation against cancellation, keeping the
/// difference from the direct formula below 1e-6 over the physical grid.
inline double occupation_via_theta(class_param h, fugacity xi) {
  const double step = std::cbrt(std::numeric_limits<double>::epsilon());
  const double log_xi = std::log(xi.value());
  const double up =
      detail::log_theta_from_s(detail::solve_s_from_log_xi(h.value(), log_xi + step));
  const double down =
      detail::log_theta_from_s(detail::solve_s_from_log_xi(h.value(), log_xi - step));
  return (up - down) / (2.0 * step);
}

}  // namespace fracton
