#include "kirbycalc/moves.hpp"

#include <string>
#include <utility>

#include "kirbycalc/error.hpp"

namespace kirby {

namespace {

// A twist along the disk of an unknotted component acts on |lk(i,c)|
// parallel strands of component i; a single strand cannot change the knot
// type, two or more can.
KnotTag degraded(const KnotTag& tag, const Int& lk_with_disk) {
  if (abs(lk_with_disk) >= 2) return KnotTag::unknown();
  return tag;
}

int require_sign(int sign) {
  if (sign != 1 && sign != -1)
    fail(Errc::InvalidParams, "sign must be +1 or -1");
  return sign;
}

}  // namespace

SurgeryPresentation blow_up(const SurgeryPresentation& p, int sign) {
  require_sign(sign);
  const std::size_t n = p.size();
  std::vector<Component> comps = p.components();
  comps.push_back({p.max_id() + 1, KnotTag::unknot(), Slope::integral(sign)});
  IntMat linking(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) linking.at(i, j) = p.linking().at(i, j);
  return assemble_presentation(std::move(comps), std::move(linking));
}

SurgeryPresentation blow_down(const SurgeryPresentation& p, int id) {
  const std::size_t c = p.position_of(id);
  const Component& target = p.at(c);
  if (!target.knot.is(KnotTag::Kind::Unknot))
    fail(Errc::NotUnknot, "blow_down on " + target.knot.name());
  if (!target.slope.is_integral() || !is_unit(target.slope.num()))
    fail(Errc::FramingNotUnit, "slope " + target.slope.num().get_str() + "/" +
                                   target.slope.den().get_str());
  const Int& eps = target.slope.num();

  const std::size_t n = p.size();
  std::vector<Component> comps;
  comps.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == c) continue;
    const Component& comp = p.at(i);
    const Int& li = p.linking().at(i, c);
    Slope slope(comp.slope.num() - eps * comp.slope.den() * li * li,
                comp.slope.den());
    comps.push_back({comp.id, degraded(comp.knot, li), std::move(slope)});
  }
  IntMat linking = p.linking().without_row_col(c, c);
  for (std::size_t i = 0, ii = 0; i < n; ++i) {
    if (i == c) continue;
    for (std::size_t j = 0, jj = 0; j < n; ++j) {
      if (j == c) continue;
      if (i != j)
        linking.at(ii, jj) -= eps * p.linking().at(i, c) * p.linking().at(j, c);
      ++jj;
    }
    ++ii;
  }
  return assemble_presentation(std::move(comps), std::move(linking));
}

SurgeryPresentation handle_slide(const SurgeryPresentation& p, int moving,
                                 int over, int sign) {
  require_sign(sign);
  if (moving == over) fail(Errc::SelfSlide, "component " + std::to_string(moving));
  const std::size_t i = p.position_of(moving);
  const std::size_t j = p.position_of(over);
  if (!p.at(i).slope.is_integral())
    fail(Errc::NonIntegral, "moving component " + std::to_string(moving));
  if (!p.at(j).slope.is_integral())
    fail(Errc::NonIntegral, "over component " + std::to_string(over));

  const Int& fi = p.at(i).slope.num();
  const Int& fj = p.at(j).slope.num();
  const Int& lij = p.linking().at(i, j);

  std::vector<Component> comps = p.components();
  comps[i].knot = KnotTag::unknown();  // band sums change knot type
  comps[i].slope = Slope::integral(fi + fj + 2 * sign * lij);

  IntMat linking = p.linking();
  linking.at(i, j) = lij + sign * fj;
  linking.at(j, i) = linking.at(i, j);
  for (std::size_t m = 0; m < p.size(); ++m) {
    if (m == i || m == j) continue;
    linking.at(i, m) += sign * p.linking().at(j, m);
    linking.at(m, i) = linking.at(i, m);
  }
  return assemble_presentation(std::move(comps), std::move(linking));
}

SurgeryPresentation rolfsen_twist(const SurgeryPresentation& p, int id,
                                  const Int& t) {
  const std::size_t c = p.position_of(id);
  if (!p.at(c).knot.is(KnotTag::Kind::Unknot))
    fail(Errc::NotUnknot, "rolfsen_twist on " + p.at(c).knot.name());

  std::vector<Component> comps = p.components();
  comps[c].slope = p.at(c).slope.twisted(t);
  IntMat linking = p.linking();
  if (t != 0) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (i == c) continue;
      const Int& li = p.linking().at(i, c);
      comps[i].knot = degraded(comps[i].knot, li);
      comps[i].slope = Slope(
          comps[i].slope.num() + t * comps[i].slope.den() * li * li,
          comps[i].slope.den());
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        if (j == c) continue;
        linking.at(i, j) += t * li * p.linking().at(j, c);
        linking.at(j, i) = linking.at(i, j);
      }
    }
  }
  return assemble_presentation(std::move(comps), std::move(linking));
}

SurgeryPresentation delete_infinity(const SurgeryPresentation& p, int id) {
  const std::size_t c = p.position_of(id);
  if (!p.at(c).slope.is_meridional())
    fail(Errc::NotMeridional, "component " + std::to_string(id));
  if (!p.at(c).knot.is(KnotTag::Kind::Unknot))
    fail(Errc::NotUnknot, "delete_infinity on " + p.at(c).knot.name());
  std::vector<Component> comps;
  comps.reserve(p.size() - 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (i != c) comps.push_back(p.at(i));
  return assemble_presentation(std::move(comps),
                               p.linking().without_row_col(c, c));
}

SurgeryPresentation retype(const SurgeryPresentation& p, int id,
                           const KnotTag& tag,
                           const std::string& justification) {
  const std::size_t c = p.position_of(id);
  if (justification.empty()) fail(Errc::EmptyJustification);
  std::vector<Component> comps = p.components();
  comps[c].knot = tag;
  return assemble_presentation(std::move(comps), p.linking());
}

SurgeryPresentation apply_move(const SurgeryPresentation& p,
                               const KirbyMove& move) {
  return std::visit(
      [&](const auto& m) -> SurgeryPresentation {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BlowUp>) return blow_up(p, m.sign);
        if constexpr (std::is_same_v<T, BlowDown>) return blow_down(p, m.id);
        if constexpr (std::is_same_v<T, HandleSlide>)
          return handle_slide(p, m.moving, m.over, m.sign);
        if constexpr (std::is_same_v<T, RolfsenTwist>)
          return rolfsen_twist(p, m.id, m.t);
        if constexpr (std::is_same_v<T, DeleteInfinity>)
          return delete_infinity(p, m.id);
        if constexpr (std::is_same_v<T, Retype>)
          return retype(p, m.id, m.tag, m.justification);
      },
      move);
}

std::string move_name(const KirbyMove& move) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BlowUp>) return "blow_up";
        if constexpr (std::is_same_v<T, BlowDown>) return "blow_down";
        if constexpr (std::is_same_v<T, HandleSlide>) return "handle_slide";
        if constexpr (std::is_same_v<T, RolfsenTwist>) return "rolfsen_twist";
        if constexpr (std::is_same_v<T, DeleteInfinity>)
          return "delete_infinity";
        if constexpr (std::is_same_v<T, Retype>) return "retype";
      },
      move);
}

std::string describe(const KirbyMove& move) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BlowUp>)
          return m.sign > 0 ? "blow_up(+1)" : "blow_up(-1)";
        if constexpr (std::is_same_v<T, BlowDown>)
          return "blow_down(" + std::to_string(m.id) + ")";
        if constexpr (std::is_same_v<T, HandleSlide>)
          return "handle_slide(" + std::to_string(m.moving) + " over " +
                 std::to_string(m.over) + ", " + (m.sign > 0 ? "+1" : "-1") +
                 ")";
        if constexpr (std::is_same_v<T, RolfsenTwist>)
          return "rolfsen_twist(" + std::to_string(m.id) +
                 ", t=" + m.t.get_str() + ")";
        if constexpr (std::is_same_v<T, DeleteInfinity>)
          return "delete_infinity(" + std::to_string(m.id) + ")";
        if constexpr (std::is_same_v<T, Retype>)
          return "retype(" + std::to_string(m.id) + " -> " + m.tag.name() +
                 ")";
      },
      move);
}

VerificationReport verify_script(const MoveScript& s) {
  VerificationReport report;
  SurgeryPresentation current = s.initial;
  report.homology_trace.push_back(
      first_homology(current, MeridianPolicy::TrivialFilling));
  report.det_trace.push_back(determinant(relation_matrix_filled(current)));

  for (std::size_t idx = 0; idx < s.moves.size(); ++idx) {
    const std::size_t step = idx + 1;
    try {
      current = apply_move(current, s.moves[idx]);
    } catch (const Error& e) {
      report.failure = Failure{step, to_string(e.code())};
      return report;
    }
    report.steps_checked = step;
    if (const auto* r = std::get_if<Retype>(&s.moves[idx]))
      report.retype_steps.push_back({step, r->justification});
    report.homology_trace.push_back(
        first_homology(current, MeridianPolicy::TrivialFilling));
    report.det_trace.push_back(determinant(relation_matrix_filled(current)));
    if (!(report.homology_trace.back() == report.homology_trace.front())) {
      report.failure = Failure{step, "HomologyChanged"};
      return report;
    }
  }

  if (!same_up_to_ids(current, s.claimed_final)) {
    report.failure = Failure{s.moves.size() + 1, "FinalMismatch"};
    return report;
  }
  report.ok = true;
  return report;
}

}  // namespace kirby
