#pragma once

#include "kirbycalc/integers.hpp"

namespace kirby {

/// Surgery slope num/den on a boundary torus, kept in normal form:
/// den >= 0, gcd(num, den) = 1, and the meridian is exactly (1, 0).
/// den > 0 means the slope is non-meridional, i.e. genuine surgery.
class Slope {
 public:
  Slope() : num_(1), den_(0) {}  // meridian
  Slope(Int num, Int den);       // normalizes; (0, 0) is rejected

  static Slope meridian() { return Slope(); }
  static Slope integral(Int framing) { return Slope(std::move(framing), 1); }

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_meridional() const { return den_ == 0; }
  bool is_integral() const { return den_ == 1; }

  // Effect of t full twists along a spanning disk: a/b -> a/(b + t*a).
  Slope twisted(const Int& t) const { return Slope(num_, den_ + t * num_); }

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  Int num_;
  Int den_;
};

}  // namespace kirby
