#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "kirbycalc/family.hpp"

namespace kirby {

// JSON is the canonical interchange format; ordered_json pins field order
// so identical inputs produce byte-identical output.
using Json = nlohmann::ordered_json;

Json encode(const Slope& s);
Json encode(const KnotTag& t);
Json encode(const SurgeryPresentation& p);
Json encode(const KirbyMove& m);
Json encode(const MoveScript& s);
Json encode(const HomologyClass& h);
Json encode(const VerificationReport& r);
Json encode(const TwoBridgeClass& c);
Json encode(const FamilyCertificate& c);

Slope decode_slope(const Json& j);
KnotTag decode_knot_tag(const Json& j);
SurgeryPresentation decode_presentation(const Json& j);
KirbyMove decode_move(const Json& j);
MoveScript decode_script(const Json& j);

/// "0" for the trivial group, else e.g. "Z/3 + Z".
std::string group_name(const HomologyClass& h);

/// One row per replayed step: move, relation determinant, invariant
/// factors, axiom flags.
std::string render_table(const MoveScript& s, const VerificationReport& r);

/// Property summary, component classes, and flagged axioms.
std::string render_table(const FamilyCertificate& c);

}  // namespace kirby
