#pragma once

#include <cstddef>
#include <vector>

#include "fracton/errors.hpp"
#include "fracton/rational.hpp"
#include "fracton/spectrum.hpp"

namespace fracton {

/// |p2*q1 - p1*q2| on the reduced representations.
inline bigint unimodular_det(const Ratio& a, const Ratio& b) {
  bigint det = b.num() * a.den() - a.num() * b.den();
  return det < 0 ? bigint(-det) : det;
}

/// Allowed-transition test: the determinant of the pair is exactly 1.
inline bool is_unimodular(const Ratio& a, const Ratio& b) {
  return unimodular_det(a, b) == 1;
}

/// Ascending irreducible fractions in [0,1] with denominator at most n,
/// built with the next-term recurrence; adjacent elements are unimodular.
inline std::vector<Ratio> farey_sequence(int n) {
  if (n < 1) throw domain_error("Farey order must be at least 1");
  std::vector<Ratio> out;
  out.emplace_back(bigint(0), bigint(1));
  bigint a = 0, b = 1, c = 1, d = n;
  while (true) {
    out.emplace_back(c, d);
    if (c == 1 && d == 1) break;
    const bigint k = (bigint(n) + b) / d;
    const bigint e = k * c - a;
    const bigint f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
  }
  return out;
}

/// An ordered chain of filling factors with per-adjacent-pair verdicts.
/// verdicts[i] covers (entries[i], entries[i+1]); spectra[i] is the
/// dimension of entries[i].
struct TransitionChain {
  std::vector<Ratio> entries;
  std::vector<bool> verdicts;
  std::vector<Ratio> spectra;

  bool valid() const {
    for (bool v : verdicts)
      if (!v) return false;
    return true;
  }
};

inline TransitionChain validate_chain(const std::vector<Ratio>& entries) {
  if (entries.size() < 2)
    throw domain_error("a transition chain needs at least 2 entries");
  TransitionChain chain;
  chain.entries = entries;
  chain.spectra.reserve(entries.size());
  for (const Ratio& nu : entries) chain.spectra.push_back(spectrum_h(nu));
  chain.verdicts.reserve(entries.size() - 1);
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    chain.verdicts.push_back(is_unimodular(entries[i], entries[i + 1]));
  return chain;
}

struct FareyTheoremEntry {
  Ratio nu;
  Ratio h;
  bool pass;
};

struct FareyTheoremReport {
  int order = 0;
  std::vector<FareyTheoremEntry> entries;
  bool all_pass = true;
};

/// For every interior element nu of F_n: its dimension h lies in (1,2) and
/// the generated class starts {nu, h, ...}, i.e. the second element of the
/// ascending member list is the dimension itself.
inline FareyTheoremReport farey_theorem_check(int n) {
  FareyTheoremReport report;
  report.order = n;
  for (const Ratio& nu : farey_sequence(n)) {
    if (!(Ratio(0) < nu && nu < Ratio(1))) continue;
    const Ratio h = spectrum_h(nu);
    bool ok = Ratio(1) < h && h < Ratio(2);
    if (ok) {
      const UniversalClass uc = class_members(h, 2);
      ok = uc.members[0] == nu && uc.members[1] == h;
    }
    report.entries.push_back({nu, h, ok});
    report.all_pass = report.all_pass && ok;
  }
  return report;
}

namespace detail {

/// Nodes visited while descending the Stern-Brocot tree from the root 1/1
/// to x, endpoints included. Plain mediant descent; the path length equals
/// the sum of the continued-fraction terms of x.
inline std::vector<Ratio> stern_brocot_trace(const Ratio& x) {
  if (!(x > Ratio(0)))
    throw domain_error("Stern-Brocot nodes are positive, got " + x.str());
  std::vector<Ratio> nodes;
  bigint ln = 0, ld = 1;  // left bound
  bigint rn = 1, rd = 0;  // right bound
  while (true) {
    Ratio node(ln + rn, ld + rd);
    nodes.push_back(node);
    if (node == x) return nodes;
    if (x < node) {
      rn = node.num();
      rd = node.den();
    } else {
      ln = node.num();
      ld = node.den();
    }
  }
}

}  // namespace detail

/// Unimodular chain from a to b along the Stern-Brocot tree: up from a to
/// the common ancestor, then down to b. Every adjacent pair in the result
/// is a parent-child edge and is therefore unimodular.
inline std::vector<Ratio> mediant_path(const Ratio& a, const Ratio& b) {
  const std::vector<Ratio> pa = detail::stern_brocot_trace(a);
  const std::vector<Ratio> pb = detail::stern_brocot_trace(b);
  std::size_t common = 0;
  while (common < pa.size() && common < pb.size() && pa[common] == pb[common])
    ++common;
  std::vector<Ratio> path;
  for (std::size_t i = pa.size(); i-- > common;) path.push_back(pa[i]);
  path.push_back(pa[common - 1]);  // common ancestor; the root always matches
  for (std::size_t i = common; i < pb.size(); ++i) path.push_back(pb[i]);
  return path;
}

}  // namespace fracton
