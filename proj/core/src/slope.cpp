#include "kirbycalc/slope.hpp"

#include "kirbycalc/error.hpp"

namespace kirby {

Slope::Slope(Int num, Int den) {
  if (num == 0 && den == 0) fail(Errc::NonNormalizableSlope, "slope 0/0");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Int g = gcd(num, den);
  num /= g;
  den /= g;
  if (den == 0) num = 1;  // both infinity representatives are the meridian
  num_ = std::move(num);
  den_ = std::move(den);
}

}  // namespace kirby
