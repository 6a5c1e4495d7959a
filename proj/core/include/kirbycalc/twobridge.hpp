#pragma once

#include <optional>
#include <vector>

#include "kirbycalc/integers.hpp"
#include "kirbycalc/knot_tag.hpp"
#include "kirbycalc/presentation.hpp"

namespace kirby {

/// Canonical Schubert form of a 2-bridge knot S(p, q):
/// q_canonical = min(q mod p, q^{-1} mod p). Two representatives name the
/// same (unoriented, chirality-sensitive) knot iff their canonical pairs
/// coincide.
struct TwoBridgeClass {
  Int p;
  Int q_canonical;

  friend bool operator==(const TwoBridgeClass& a, const TwoBridgeClass& b) {
    return a.p == b.p && a.q_canonical == b.q_canonical;
  }
  friend bool operator<(const TwoBridgeClass& a, const TwoBridgeClass& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.q_canonical < b.q_canonical;
  }
};

/// Canonicalizes (p, q); p odd >= 3, q not divisible by p, gcd(p, q) = 1.
TwoBridgeClass normalize(const Int& p, const Int& q);

bool equivalent(const TwoBridgeClass& a, const TwoBridgeClass& b);

/// Variant that also identifies mirror images (q' = -q^{+-1} mod p).
bool equivalent_up_to_mirror(const TwoBridgeClass& a, const TwoBridgeClass& b);

/// A 2-bridge knot is hyperbolic iff it is not a torus knot, i.e. its
/// canonical q is neither 1 nor p-1.
bool is_hyperbolic(const TwoBridgeClass& c);

/// Knot determinant of S(p, q): always p.
Int knot_determinant(const TwoBridgeClass& c);

/// Class named by a tag, when the tag names a knot: FigureEight is S(5,3),
/// TwoBridge(p,q) is itself; Unknot/Unknown carry no class.
std::optional<TwoBridgeClass> class_of(const KnotTag& tag);

/// Minus-sign continued fraction x = a_1 - 1/(a_2 - 1/(...)). Expansion by
/// ceiling division, so a_j >= 2 for j >= 2 and the first coefficient
/// absorbs the sign; folding reproduces the source fraction exactly.
struct NegContinuedFraction {
  std::vector<Int> coefficients;
};

NegContinuedFraction neg_continued_fraction(const Int& num, const Int& den);

/// Exact fold-back of a coefficient list.
Rat fold(const NegContinuedFraction& f);

/// Replaces the rational slope a/b (b >= 2) on an unknotted component by
/// the integer-framed chain read off its continued fraction: the component
/// keeps coefficient a_1 and a chain of unknots framed a_2..a_m is hung off
/// it with consecutive linkings 1. First homology is unchanged.
SurgeryPresentation expand_rational_surgery(const SurgeryPresentation& p,
                                            int id);

}  // namespace kirby
