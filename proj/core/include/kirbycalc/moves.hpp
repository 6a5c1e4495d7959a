#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kirbycalc/homology.hpp"
#include "kirbycalc/presentation.hpp"

namespace kirby {

// Algebraic shadows of the Kirby/Rolfsen moves. Moves act on tags, slopes
// and the linking matrix only; geometric realizability of a script is the
// certificate author's responsibility. The engine checks all framing and
// linking arithmetic and homology invariance, and flags every retype.

struct BlowUp {
  int sign = +1;
};
struct BlowDown {
  int id = 0;
};
struct HandleSlide {
  int moving = 0;
  int over = 0;
  int sign = +1;
};
struct RolfsenTwist {
  int id = 0;
  Int t;
};
struct DeleteInfinity {
  int id = 0;
};
struct Retype {
  int id = 0;
  KnotTag tag;
  std::string justification;
};

using KirbyMove =
    std::variant<BlowUp, BlowDown, HandleSlide, RolfsenTwist, DeleteInfinity,
                 Retype>;

/// Appends a split unknot with framing sign (+1 or -1) and zero linking.
SurgeryPresentation blow_up(const SurgeryPresentation& p, int sign);

/// Removes an unknotted component c with slope e/1, e = +-1, compensating
/// through its disk: num_i -= e * den_i * lk(i,c)^2 and
/// lk(i,j) -= e * lk(i,c) * lk(j,c).
SurgeryPresentation blow_down(const SurgeryPresentation& p, int id);

/// Slides component i across the framed push-off of j (both integral):
/// f_i += f_j + 2*s*lk(i,j); lk(i,j) += s*f_j; lk(i,m) += s*lk(j,m).
/// Equivalently the framed matrix A becomes E^T A E with E = I + s*e_{j,i}.
/// The band sum can change the knot type, so i's tag becomes Unknown.
SurgeryPresentation handle_slide(const SurgeryPresentation& p, int moving,
                                 int over, int sign);

/// t full twists along the disk of unknotted component c:
/// slope of c: a/b -> a/(b + t*a); num_i += t * den_i * lk(i,c)^2;
/// lk(i,j) += t * lk(i,c) * lk(j,c); lk(i,c) unchanged.
SurgeryPresentation rolfsen_twist(const SurgeryPresentation& p, int id,
                                  const Int& t);

/// Removes a meridionally-sloped unknot; a meridional filling is trivial,
/// so everything else is untouched.
SurgeryPresentation delete_infinity(const SurgeryPresentation& p, int id);

/// Replaces the knot tag of c. The one move the engine cannot check; it is
/// recorded as an axiom with its justification in every report.
SurgeryPresentation retype(const SurgeryPresentation& p, int id,
                           const KnotTag& tag, const std::string& justification);

SurgeryPresentation apply_move(const SurgeryPresentation& p,
                               const KirbyMove& move);

std::string move_name(const KirbyMove& move);
std::string describe(const KirbyMove& move);

/// A checkable certificate: replaying `moves` from `initial` must satisfy
/// every precondition, keep first homology constant, and end at
/// `claimed_final` (up to component-id renumbering).
struct MoveScript {
  SurgeryPresentation initial;
  std::vector<KirbyMove> moves;
  SurgeryPresentation claimed_final;
  std::string comment;  // free-form, never checked
};

struct RetypeStep {
  std::size_t step = 0;  // 1-based move index
  std::string justification;
};

struct Failure {
  std::size_t step = 0;  // moves.size() + 1 marks the final-state comparison
  std::string reason;
};

struct VerificationReport {
  bool ok = false;
  std::size_t steps_checked = 0;
  // Entry 0 is the initial presentation, then one entry per replayed move.
  std::vector<HomologyClass> homology_trace;
  // Relation-matrix determinants, aligned with homology_trace.
  std::vector<Int> det_trace;
  std::vector<RetypeStep> retype_steps;
  std::optional<Failure> failure;
};

VerificationReport verify_script(const MoveScript& s);

}  // namespace kirby
