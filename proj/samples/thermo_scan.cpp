// Scans the thermodynamics of one exclusion parameter across a fugacity
// range and prints the fractal index at the end.
//
// Usage: thermo_scan [h] (default 3/2)

#include <cstdio>
#include <cstdlib>

#include <fracton/fracton.hpp>

int main(int argc, char** argv) {
  const double h = argc > 1 ? std::strtod(argv[1], nullptr) : 1.5;

  std::printf("%-12s %-16s %-16s %-16s\n", "xi", "n", "theta", "S/K");
  for (double xi : fracton::make_grid({0.01, 100.0, 13, true})) {
    const fracton::ThermoPoint point = fracton::thermo_point(h, xi);
    std::printf("%-12.6g %-16.12g %-16.12g %-16.12g\n", xi, point.n,
                point.theta, point.entropy_per_state);
  }

  const fracton::FractalIndex index = fracton::fractal_index(h);
  std::printf("\nfractal index i_f(%g) = %.12g (error estimate %.3g)\n", h,
              index.value, index.abs_error_estimate);
  return 0;
}
