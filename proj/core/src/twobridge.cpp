#include "kirbycalc/twobridge.hpp"

#include <algorithm>
#include <utility>

#include "kirbycalc/error.hpp"

namespace kirby {

TwoBridgeClass normalize(const Int& p, const Int& q) {
  if (mpz_even_p(p.get_mpz_t())) fail(Errc::EvenP, "p = " + p.get_str());
  if (p < 3) fail(Errc::InvalidParams, "p must be >= 3, got " + p.get_str());
  const Int q0 = mod_floor(q, p);
  if (q0 == 0) fail(Errc::DegenerateQ, "q divisible by p");
  if (gcd(p, q0) != 1)
    fail(Errc::NotCoprime, "gcd(" + p.get_str() + ", " + q.get_str() + ") > 1");
  const Int qi = mod_inverse(q0, p);
  return {p, std::min(q0, qi)};
}

bool equivalent(const TwoBridgeClass& a, const TwoBridgeClass& b) {
  return a == b;
}

bool equivalent_up_to_mirror(const TwoBridgeClass& a, const TwoBridgeClass& b) {
  if (a.p != b.p) return false;
  if (a.q_canonical == b.q_canonical) return true;
  // The mirror of S(p, q) is S(p, -q); compare its canonical form.
  return normalize(a.p, a.p - a.q_canonical).q_canonical == b.q_canonical;
}

bool is_hyperbolic(const TwoBridgeClass& c) {
  // Torus 2-bridge knots are exactly q = +-1 mod p.
  return c.q_canonical != 1 && c.q_canonical != c.p - 1;
}

Int knot_determinant(const TwoBridgeClass& c) { return c.p; }

std::optional<TwoBridgeClass> class_of(const KnotTag& tag) {
  switch (tag.kind()) {
    case KnotTag::Kind::FigureEight: return normalize(5, 3);
    case KnotTag::Kind::TwoBridge: return normalize(tag.p(), tag.q());
    default: return std::nullopt;
  }
}

NegContinuedFraction neg_continued_fraction(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::ZeroDenominator);
  Int n = num;
  Int d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (gcd(n, d) != 1)
    fail(Errc::NotCoprime, n.get_str() + "/" + d.get_str());

  NegContinuedFraction f;
  for (;;) {
    const Int a = ceil_div(n, d);
    f.coefficients.push_back(a);
    Int r = a * d - n;  // a - n/d = r/d with 0 <= r < d
    if (r == 0) break;
    n = std::move(d);
    d = std::move(r);  // next fraction d/r > 1, so later terms are >= 2
  }
  return f;
}

Rat fold(const NegContinuedFraction& f) {
  if (f.coefficients.empty()) fail(Errc::InvalidParams, "empty coefficients");
  Rat x(f.coefficients.back());
  for (auto it = std::next(f.coefficients.rbegin()); it != f.coefficients.rend();
       ++it) {
    if (x == 0) fail(Errc::ZeroDenominator, "fold hit 1/0");
    x = Rat(*it) - 1 / x;
  }
  return x;
}

SurgeryPresentation expand_rational_surgery(const SurgeryPresentation& p,
                                            int id) {
  const std::size_t c = p.position_of(id);
  const Component& target = p.at(c);
  if (!target.knot.is(KnotTag::Kind::Unknot))
    fail(Errc::NotUnknot, "expand on " + target.knot.name());
  if (target.slope.is_meridional())
    fail(Errc::Meridional, "component " + std::to_string(id));
  if (target.slope.is_integral())
    fail(Errc::AlreadyIntegral, "component " + std::to_string(id));

  const NegContinuedFraction f =
      neg_continued_fraction(target.slope.num(), target.slope.den());
  const std::size_t n = p.size();
  const std::size_t extra = f.coefficients.size() - 1;

  std::vector<Component> comps = p.components();
  comps[c].slope = Slope::integral(f.coefficients[0]);
  int next_id = p.max_id();
  for (std::size_t t = 1; t < f.coefficients.size(); ++t)
    comps.push_back(
        {++next_id, KnotTag::unknot(), Slope::integral(f.coefficients[t])});

  IntMat linking(n + extra, n + extra);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) linking.at(i, j) = p.linking().at(i, j);
  // Chain hangs off c: c - u_1 - u_2 - ... with consecutive linkings 1.
  std::size_t prev = c;
  for (std::size_t t = 0; t < extra; ++t) {
    linking.at(prev, n + t) = 1;
    linking.at(n + t, prev) = 1;
    prev = n + t;
  }
  return assemble_presentation(std::move(comps), std::move(linking));
}

}  // namespace kirby
