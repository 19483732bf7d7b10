#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "fracton/errors.hpp"

namespace fracton {

/// Fixed 12-significant-digit rendering used for every emitted real, so
/// identical requests produce byte-identical documents.
inline std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// The double a reader of format_real's output reconstructs. Numbers placed
/// in structured output are passed through this so that typed emission and
/// textual emission round-trip to the same value.
inline double round_trip_real(double v) {
  return std::strtod(format_real(v).c_str(), nullptr);
}

struct GridSpec {
  double lo = 0.0;
  double hi = 0.0;
  int n = 0;
  bool log_spaced = false;
};

/// Parses "lo:hi:n" or "lo:hi:n:log". Requires lo < hi, n >= 2 and, for
/// logarithmic spacing, lo > 0.
inline GridSpec parse_grid(std::string_view text) {
  const auto bad = [&](const std::string& why) {
    return domain_error("invalid grid '" + std::string(text) + "': " + why);
  };
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ':') {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  if (parts.size() != 3 && parts.size() != 4)
    throw bad("expected lo:hi:n or lo:hi:n:log");
  const auto to_double = [&](const std::string& s) {
    if (s.empty()) throw bad("empty field");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v))
      throw bad("not a finite number: '" + s + "'");
    return v;
  };
  GridSpec grid;
  grid.lo = to_double(parts[0]);
  grid.hi = to_double(parts[1]);
  if (parts[2].empty()) throw bad("empty field");
  char* end = nullptr;
  const long n = std::strtol(parts[2].c_str(), &end, 10);
  if (end != parts[2].c_str() + parts[2].size()) throw bad("point count must be an integer");
  if (n < 2 || n > 10'000'000) throw bad("point count must be between 2 and 10^7");
  grid.n = static_cast<int>(n);
  if (parts.size() == 4) {
    if (parts[3] != "log") throw bad("trailing field must be 'log'");
    grid.log_spaced = true;
  }
  if (!(grid.lo < grid.hi)) throw bad("needs lo < hi");
  if (grid.log_spaced && !(grid.lo > 0)) throw bad("log spacing needs lo > 0");
  return grid;
}

/// Evaluation points of the grid; both endpoints are hit exactly.
inline std::vector<double> make_grid(const GridSpec& grid) {
  std::vector<double> points;
  points.reserve(static_cast<std::size_t>(grid.n));
  if (grid.log_spaced) {
    const double llo = std::log(grid.lo);
    const double lhi = std::log(grid.hi);
    for (int i = 0; i < grid.n; ++i)
      points.push_back(std::exp(llo + (lhi - llo) * i / (grid.n - 1)));
  } else {
    for (int i = 0; i < grid.n; ++i)
      points.push_back(grid.lo + (grid.hi - grid.lo) * i / (grid.n - 1));
  }
  points.front() = grid.lo;
  points.back() = grid.hi;
  return points;
}

}  // namespace fracton
