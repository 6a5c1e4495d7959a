#pragma once

#include <gmpxx.h>

#include <cstdint>

namespace kirby {

// All certificate arithmetic is exact: arbitrary-precision integers and
// rationals, no floating point.
using Int = mpz_class;
using Rat = mpq_class;

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Representative of a mod m in [0, m); m > 0.
inline Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Inverse of a modulo m; requires gcd(a, m) = 1, m >= 2.
Int mod_inverse(const Int& a, const Int& m);

// Ceiling of num/den; den > 0.
inline Int ceil_div(const Int& num, const Int& den) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline bool is_unit(const Int& v) { return v == 1 || v == -1; }

// Checked narrowing for the JSON boundary.
std::int64_t to_int64(const Int& v);

}  // namespace kirby
