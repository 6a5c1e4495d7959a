#pragma once

#include <string>

#include "kirbycalc/integers.hpp"

namespace kirby {

/// Knot-type label attached to a surgery component. Presentations carry no
/// diagram data, so knot types are tracked as tags: moves that can change a
/// knot type downgrade the tag to Unknown, and only an explicit retype (with
/// a recorded justification) upgrades it again.
class KnotTag {
 public:
  enum class Kind { Unknot, FigureEight, TwoBridge, Unknown };

  KnotTag() : kind_(Kind::Unknown) {}

  static KnotTag unknot() { return KnotTag(Kind::Unknot); }
  static KnotTag figure_eight() { return KnotTag(Kind::FigureEight); }
  static KnotTag unknown() { return KnotTag(Kind::Unknown); }
  // Schubert pair of a 2-bridge knot; p odd >= 3, gcd(p, q mod p) = 1.
  // q is stored as given; canonical forms live in twobridge.hpp.
  static KnotTag two_bridge(Int p, Int q);

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  const Int& p() const { return p_; }
  const Int& q() const { return q_; }

  std::string name() const;

  friend bool operator==(const KnotTag& a, const KnotTag& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  explicit KnotTag(Kind kind) : kind_(kind) {}
  Kind kind_;
  Int p_;
  Int q_;
};

}  // namespace kirby
