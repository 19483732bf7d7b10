#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <utility>
#include <vector>

#include "fracton/errors.hpp"

namespace fracton {

struct quad_result {
  double value = 0.0;
  double abs_error = 0.0;  // sum of per-interval Gauss/Kronrod differences
  int intervals = 0;
  bool converged = false;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1,1]. The Gauss nodes are the
// odd-index Kronrod abscissae plus the center.
inline constexpr double kKronrodX[8] = {
    0.9914553711208126392068547, 0.9491079123427585245261897,
    0.8648644233597690727897128, 0.7415311855993944398638648,
    0.5860872354676911302941448, 0.4058451513773971669066064,
    0.2077849550078984676006894, 0.0};
inline constexpr double kKronrodW[8] = {
    0.0229353220105292249637320, 0.0630920926299785532907007,
    0.1047900103222501838398763, 0.1406532597155259187451896,
    0.1690047266392679028265834, 0.1903505780647854099132564,
    0.2044329400752988924141620, 0.2094821410847278280129992};
inline constexpr double kGaussW[4] = {
    0.1294849661688696932706114, 0.2797053914892766679014678,
    0.3818300505051189449503698, 0.4179591836734693877551020};

struct interval_estimate {
  double a, b;
  double value;  // Kronrod value
  double error;  // |Kronrod - Gauss|, scaled to the interval
};

// One Gauss-Kronrod pass; endpoints are never evaluated, so integrable
// endpoint singularities are admissible.
template <class F>
interval_estimate gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double kronrod = kKronrodW[7] * f(center);
  double gauss = kGaussW[3] * f(center);
  for (int j = 0; j < 7; ++j) {
    const double offset = half * kKronrodX[j];
    const double pair = f(center - offset) + f(center + offset);
    kronrod += kKronrodW[j] * pair;
    if (j % 2 == 1) gauss += kGaussW[j / 2] * pair;
  }
  return {a, b, half * kronrod, std::abs(half * (kronrod - gauss))};
}

}  // namespace detail

/// Globally adaptive integration of f over [a, b]: the interval with the
/// largest error estimate is bisected until the summed estimate falls below
/// abs_tol or the interval budget is exhausted. The final value is a Kahan
/// sum over intervals sorted by position, so the result does not depend on
/// the refinement history.
template <class F>
quad_result integrate(F&& f, double a, double b, double abs_tol,
                      int max_intervals = 2000) {
  if (!(a <= b)) throw domain_error("integration needs a <= b");
  if (!(abs_tol > 0)) throw domain_error("quadrature tolerance must be positive");
  if (a == b) return {0.0, 0.0, 0, true};

  const auto worse = [](const detail::interval_estimate& x,
                        const detail::interval_estimate& y) {
    if (x.error != y.error) return x.error < y.error;
    return x.a < y.a;  // deterministic tie break
  };
  std::priority_queue<detail::interval_estimate,
                      std::vector<detail::interval_estimate>, decltype(worse)>
      queue(worse);

  queue.push(detail::gk15(f, a, b));
  double total_error = queue.top().error;
  int count = 1;
  while (total_error > abs_tol && count < max_intervals) {
    const detail::interval_estimate worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // interval no longer splittable in double precision
      queue.push(worst);
      break;
    }
    const auto left = detail::gk15(f, worst.a, mid);
    const auto right = detail::gk15(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++count;
  }

  std::vector<detail::interval_estimate> cells;
  cells.reserve(static_cast<std::size_t>(count));
  while (!queue.empty()) {
    cells.push_back(queue.top());
    queue.pop();
  }
  std::sort(cells.begin(), cells.end(),
            [](const auto& x, const auto& y) { return x.a < y.a; });

  quad_result result;
  result.intervals = count;
  double carry = 0.0;
  double err = 0.0;
  for (const auto& cell : cells) {
    const double y = cell.value - carry;
    const double t = result.value + y;
    carry = (t - result.value) - y;
    result.value = t;
    err += cell.error;
  }
  result.abs_error = err;
  result.converged = err <= abs_tol;
  return result;
}

}  // namespace fracton
