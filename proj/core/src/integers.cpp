#include "kirbycalc/integers.hpp"

#include <limits>

#include "kirbycalc/error.hpp"

namespace kirby {

Int mod_inverse(const Int& a, const Int& m) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(Errc::NotCoprime, "no inverse mod " + m.get_str());
  return inv;
}

std::int64_t to_int64(const Int& v) {
  static_assert(sizeof(long) == 8, "64-bit long expected");
  if (!v.fits_slong_p()) fail(Errc::Overflow, v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace kirby
