#pragma once

#include <cmath>
#include <string>

#include "fracton/distribution.hpp"
#include "fracton/errors.hpp"

namespace fracton {

/// Von Neumann entropy per state S/K as a function of occupation.
///
/// S/K = [1+(h-1)n] ln((1+(h-1)n)/n) - [1+(h-2)n] ln((1+(h-2)n)/n).
/// Physical occupations are 0 < n < 1/(2-h) for h < 2 and any n > 0 for the
/// bosonic border h = 2; h = 1 reduces this to the binary entropy.
inline double entropy_per_state(class_param h, double n) {
  const double hv = h.value();
  const bool in_range =
      n > 0 && std::isfinite(n) && (hv == 2.0 || n < 1.0 / (2.0 - hv));
  if (!in_range)
    throw domain_error("unphysical occupation " + std::to_string(n) +
                       " for class dimension " + std::to_string(hv));
  const double a = 1.0 + (hv - 1.0) * n;  // equals n*(Y-1) at a solved point
  const double b = 1.0 + (hv - 2.0) * n;  // equals n*(Y-2), vanishing at the cap
  const double log_n = std::log(n);
  const double first = a * (std::log(a) - log_n);
  const double second = b == 0.0 ? 0.0 : b * (std::log(b) - log_n);
  return first - second;
}

/// ln W for N particles over G states in the class with dimension h, with
/// the non-integer factorials read as Gamma functions:
/// ln W = lnGamma(A+1) - lnGamma(N+1) - lnGamma(A-N+1), A = G + (N-1)(h-1).
/// (ln W)/G approaches entropy_per_state(h, N/G) as G grows.
inline double log_statistical_weight(class_param h, long long G, long long N) {
  if (G < 1) throw domain_error("state count G must be positive");
  if (N < 0) throw domain_error("particle count N must be nonnegative");
  const double A =
      static_cast<double>(G) + (static_cast<double>(N) - 1.0) * (h.value() - 1.0);
  if (!(A >= 0.0) || !(A - static_cast<double>(N) >= 0.0))
    throw domain_error("invalid occupancy: weight arguments G+(N-1)(h-1)=" +
                       std::to_string(A) + ", N=" + std::to_string(N) +
                       " leave a negative factorial argument");
  return std::lgamma(A + 1.0) - std::lgamma(static_cast<double>(N) + 1.0) -
         std::lgamma(A - static_cast<double>(N) + 1.0);
}

/// Full evaluation context at (h, xi): the solved root, occupation,
/// partition function and entropy per state.
struct ThermoPoint {
  double h;
  double xi;
  double Y;
  double n;
  double theta;
  double entropy_per_state;
};

inline ThermoPoint thermo_point(class_param h, fugacity xi) {
  const double s = detail::solve_s(h, xi);
  const double es = std::exp(s);
  ThermoPoint point;
  point.h = h.value();
  point.xi = xi.value();
  point.Y = 2.0 + es;
  point.n = 1.0 / (2.0 - h.value() + es);
  point.theta = detail::logistic(s);
  // same S/K regrouped through the solved root: with a = n(Y-1), b = n(Y-2)
  // the entropy is n[(Y-1)ln(Y-1) - (Y-2)ln(Y-2)]; evaluating it from s
  // stays finite at deeply degenerate points where n rounds onto its cap
  point.entropy_per_state =
      point.n * ((1.0 + es) * detail::softplus(s) - es * s);
  return point;
}

}  // namespace fracton
