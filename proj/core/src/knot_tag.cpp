#include "kirbycalc/knot_tag.hpp"

#include "kirbycalc/error.hpp"

namespace kirby {

KnotTag KnotTag::two_bridge(Int p, Int q) {
  if (mpz_even_p(p.get_mpz_t())) fail(Errc::EvenP, "p = " + p.get_str());
  if (p < 3) fail(Errc::InvalidParams, "p must be >= 3, got " + p.get_str());
  Int q0 = mod_floor(q, p);
  if (q0 == 0) fail(Errc::DegenerateQ, "q divisible by p");
  if (gcd(p, q0) != 1)
    fail(Errc::NotCoprime, "gcd(" + p.get_str() + ", " + q.get_str() + ") > 1");
  KnotTag tag(Kind::TwoBridge);
  tag.p_ = std::move(p);
  tag.q_ = std::move(q);
  return tag;
}

std::string KnotTag::name() const {
  switch (kind_) {
    case Kind::Unknot: return "Unknot";
    case Kind::FigureEight: return "FigureEight";
    case Kind::TwoBridge:
      return "TwoBridge(" + p_.get_str() + "," + q_.get_str() + ")";
    case Kind::Unknown: return "Unknown";
  }
  return "Unknown";
}

}  // namespace kirby
