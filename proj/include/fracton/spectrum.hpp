#pragma once

#include <vector>

#include "fracton/errors.hpp"
#include "fracton/rational.hpp"

namespace fracton {

/// A Hausdorff dimension h together with the filling factors it generates.
/// Members ascend as {2-h, h, 4-h, 2+h, 6-h, 4+h, ...}; spins are members/2.
struct UniversalClass {
  Ratio h;
  std::vector<Ratio> members;
  std::vector<Ratio> spins;
};

/// A filling factor, its in-band reflection partner, and their dimensions.
/// Invariants: h + h_dual = 3 and nu + nu_dual = 2*floor(nu) + 1.
struct DualPair {
  Ratio nu;
  Ratio nu_dual;
  Ratio h;
  Ratio h_dual;
};

/// Hausdorff dimension of the quantum path for filling factor nu > 0.
///
/// On (2k, 2k+1) the value is 2k+2-nu, on (2k+1, 2k+2) it is nu-2k; both
/// one-sided limits agree at the integers, giving 1 on odd and 2 on even.
inline Ratio spectrum_h(const Ratio& nu) {
  if (!(nu > Ratio(0)))
    throw domain_error("spectrum requires a positive filling factor, got " +
                       nu.str());
  const bigint f = nu.floor();
  const bool odd_band = (f % 2) != 0;
  if (nu.is_integer()) return odd_band ? Ratio(1) : Ratio(2);
  if (odd_band) return nu - Ratio(f - 1);
  return Ratio(f + 2) - nu;
}

/// First `count` filling factors of the class with dimension h in (1,2),
/// ascending, with their spins. count = 0 yields empty lists.
inline UniversalClass class_members(const Ratio& h, int count) {
  if (!(Ratio(1) < h && h < Ratio(2)))
    throw domain_error("class dimension must lie strictly between 1 and 2, got " +
                       h.str());
  if (count < 0) throw domain_error("member count must be nonnegative");
  UniversalClass uc;
  uc.h = h;
  uc.members.reserve(static_cast<std::size_t>(count));
  uc.spins.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int m = i / 2;
    const Ratio value =
        (i % 2 == 0) ? Ratio(2 * m + 2) - h : Ratio(2 * m) + h;
    uc.members.push_back(value);
    uc.spins.push_back(value / Ratio(2));
  }
  return uc;
}

/// Duality partner dimension, h in [1,2] -> 3 - h. Self-dual at 3/2.
inline Ratio dual_class(const Ratio& h) {
  if (!(Ratio(1) <= h && h <= Ratio(2)))
    throw domain_error("dual is defined for dimensions in [1,2], got " +
                       h.str());
  return Ratio(3) - h;
}

/// In-band reflection partner of a non-integer filling factor:
/// nu_dual = (2*floor(nu) + 1) - nu, the unique partner with h + h_dual = 3.
inline DualPair dual_filling(const Ratio& nu) {
  if (!(nu > Ratio(0)))
    throw domain_error("dual filling requires a positive factor, got " +
                       nu.str());
  if (nu.is_integer())
    throw domain_error(
        "integer filling factors sit on a class border and have no dual "
        "partner in their band");
  const bigint k = nu.floor();
  DualPair pair;
  pair.nu = nu;
  pair.nu_dual = Ratio(2 * k + 1) - nu;
  pair.h = spectrum_h(nu);
  pair.h_dual = spectrum_h(pair.nu_dual);
  return pair;
}

}  // namespace fracton
