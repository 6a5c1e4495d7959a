#include "kirbycalc/serialize.hpp"

#include <sstream>
#include <utility>
#include <vector>

#include "kirbycalc/error.hpp"

namespace kirby {

namespace {

Json encode_int(const Int& v) { return Json(to_int64(v)); }

Int require_int(const Json& j, const char* where) {
  if (!j.is_number_integer())
    fail(Errc::ParseError, std::string(where) + " must be an integer");
  return Int(static_cast<long>(j.get<std::int64_t>()));
}

const Json& require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::ParseError, std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::string require_string(const Json& j, const char* where) {
  if (!j.is_string())
    fail(Errc::ParseError, std::string(where) + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Json encode(const Slope& s) {
  Json j;
  j["num"] = encode_int(s.num());
  j["den"] = encode_int(s.den());
  return j;
}

Slope decode_slope(const Json& j) {
  return Slope(require_int(require_field(j, "num"), "slope.num"),
               require_int(require_field(j, "den"), "slope.den"));
}

Json encode(const KnotTag& t) {
  Json j;
  switch (t.kind()) {
    case KnotTag::Kind::Unknot: j["kind"] = "Unknot"; break;
    case KnotTag::Kind::FigureEight: j["kind"] = "FigureEight"; break;
    case KnotTag::Kind::TwoBridge:
      j["kind"] = "TwoBridge";
      j["p"] = encode_int(t.p());
      j["q"] = encode_int(t.q());
      break;
    case KnotTag::Kind::Unknown: j["kind"] = "Unknown"; break;
  }
  return j;
}

KnotTag decode_knot_tag(const Json& j) {
  const std::string kind = require_string(require_field(j, "kind"), "knot.kind");
  if (kind == "Unknot") return KnotTag::unknot();
  if (kind == "FigureEight") return KnotTag::figure_eight();
  if (kind == "Unknown") return KnotTag::unknown();
  if (kind == "TwoBridge")
    return KnotTag::two_bridge(require_int(require_field(j, "p"), "knot.p"),
                               require_int(require_field(j, "q"), "knot.q"));
  fail(Errc::ParseError, "unknown knot kind \"" + kind + "\"");
}

Json encode(const SurgeryPresentation& p) {
  Json j;
  j["components"] = Json::array();
  for (const auto& c : p.components()) {
    Json jc;
    jc["id"] = c.id;
    jc["knot"] = encode(c.knot);
    jc["slope"] = encode(c.slope);
    j["components"].push_back(std::move(jc));
  }
  Json linking = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < p.size(); ++k)
      row.push_back(encode_int(p.linking().at(i, k)));
    linking.push_back(std::move(row));
  }
  j["linking"] = std::move(linking);
  return j;
}

SurgeryPresentation decode_presentation(const Json& j) {
  const Json& jcomps = require_field(j, "components");
  const Json& jlink = require_field(j, "linking");
  if (!jcomps.is_array() || !jlink.is_array())
    fail(Errc::ParseError, "components and linking must be arrays");

  std::vector<Component> comps;
  comps.reserve(jcomps.size());
  for (const Json& jc : jcomps) {
    Component c;
    const Json& jid = require_field(jc, "id");
    if (!jid.is_number_integer()) fail(Errc::ParseError, "id must be an integer");
    c.id = jid.get<int>();
    c.knot = decode_knot_tag(require_field(jc, "knot"));
    c.slope = decode_slope(require_field(jc, "slope"));
    comps.push_back(std::move(c));
  }

  const std::size_t n = comps.size();
  if (jlink.size() != n) fail(Errc::ParseError, "linking row count mismatch");
  IntMat linking(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = jlink.at(i);
    if (!row.is_array() || row.size() != n)
      fail(Errc::ParseError, "linking must be a full square matrix");
    for (std::size_t k = 0; k < n; ++k)
      linking.at(i, k) = require_int(row.at(k), "linking entry");
  }
  return assemble_presentation(std::move(comps), std::move(linking));
}

Json encode(const KirbyMove& m) {
  Json j;
  j["op"] = move_name(m);
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, BlowUp>) {
          j["sign"] = mv.sign;
        } else if constexpr (std::is_same_v<T, BlowDown>) {
          j["id"] = mv.id;
        } else if constexpr (std::is_same_v<T, HandleSlide>) {
          j["moving"] = mv.moving;
          j["over"] = mv.over;
          j["sign"] = mv.sign;
        } else if constexpr (std::is_same_v<T, RolfsenTwist>) {
          j["id"] = mv.id;
          j["t"] = encode_int(mv.t);
        } else if constexpr (std::is_same_v<T, DeleteInfinity>) {
          j["id"] = mv.id;
        } else if constexpr (std::is_same_v<T, Retype>) {
          j["id"] = mv.id;
          j["knot"] = encode(mv.tag);
          j["justification"] = mv.justification;
        }
      },
      m);
  return j;
}

KirbyMove decode_move(const Json& j) {
  const std::string op = require_string(require_field(j, "op"), "move.op");
  auto get_int = [&](const char* key) {
    const Json& f = require_field(j, key);
    if (!f.is_number_integer())
      fail(Errc::ParseError, std::string(key) + " must be an integer");
    return f.get<int>();
  };
  if (op == "blow_up") return BlowUp{get_int("sign")};
  if (op == "blow_down") return BlowDown{get_int("id")};
  if (op == "handle_slide")
    return HandleSlide{get_int("moving"), get_int("over"), get_int("sign")};
  if (op == "rolfsen_twist")
    return RolfsenTwist{get_int("id"), require_int(require_field(j, "t"), "t")};
  if (op == "delete_infinity") return DeleteInfinity{get_int("id")};
  if (op == "retype")
    return Retype{get_int("id"), decode_knot_tag(require_field(j, "knot")),
                  require_string(require_field(j, "justification"),
                                 "justification")};
  fail(Errc::ParseError, "unknown move op \"" + op + "\"");
}

Json encode(const MoveScript& s) {
  Json j;
  j["initial"] = encode(s.initial);
  j["moves"] = Json::array();
  for (const auto& m : s.moves) j["moves"].push_back(encode(m));
  j["final"] = encode(s.claimed_final);
  if (!s.comment.empty()) j["comment"] = s.comment;
  return j;
}

MoveScript decode_script(const Json& j) {
  MoveScript s;
  s.initial = decode_presentation(require_field(j, "initial"));
  const Json& jm = require_field(j, "moves");
  if (!jm.is_array()) fail(Errc::ParseError, "moves must be an array");
  for (const Json& m : jm) s.moves.push_back(decode_move(m));
  s.claimed_final = decode_presentation(require_field(j, "final"));
  if (j.contains("comment"))
    s.comment = require_string(j.at("comment"), "comment");
  return s;
}

Json encode(const HomologyClass& h) {
  Json j = Json::array();
  for (const Int& f : h.invariant_factors) j.push_back(encode_int(f));
  return j;
}

Json encode(const VerificationReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["steps_checked"] = r.steps_checked;
  j["homology_trace"] = Json::array();
  for (const auto& h : r.homology_trace) j["homology_trace"].push_back(encode(h));
  j["det_trace"] = Json::array();
  for (const auto& d : r.det_trace) j["det_trace"].push_back(encode_int(d));
  j["retype_steps"] = Json::array();
  for (const auto& rs : r.retype_steps) {
    Json step;
    step["step"] = rs.step;
    step["justification"] = rs.justification;
    j["retype_steps"].push_back(std::move(step));
  }
  if (r.failure) {
    Json f;
    f["step"] = r.failure->step;
    f["reason"] = r.failure->reason;
    j["failure"] = std::move(f);
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

Json encode(const TwoBridgeClass& c) {
  Json j;
  j["p"] = encode_int(c.p);
  j["q_canonical"] = encode_int(c.q_canonical);
  return j;
}

Json encode(const FamilyCertificate& c) {
  Json j;
  j["params"] = Json{{"n", c.params.n}, {"k", encode_int(c.params.k)}};
  j["presentation"] = encode(c.presentation);
  j["component_classes"] = Json::array();
  for (const auto& cls : c.component_classes)
    j["component_classes"].push_back(encode(cls));
  j["properties"] = Json{
      {"nontrivial_surgery_yields_s3", c.properties.nontrivial_surgery_yields_s3},
      {"components_distinct_hyperbolic",
       c.properties.components_distinct_hyperbolic},
      {"unsplittable", c.properties.unsplittable},
      {"tunnel_number_exact", c.properties.tunnel_number_exact}};
  j["tunnel_number"] = encode_int(c.tunnel_number);
  j["retype_axioms"] = Json::array();
  for (const auto& a : c.retype_axioms) {
    Json ax;
    ax["step"] = a.step;
    ax["justification"] = a.justification;
    j["retype_axioms"].push_back(std::move(ax));
  }
  j["cited_facts"] = c.cited_facts;
  j["script"] = encode(c.script);
  j["s3_report"] = encode(c.s3_report);
  return j;
}

std::string group_name(const HomologyClass& h) {
  if (h.trivial()) return "0";
  std::string out;
  for (const Int& f : h.invariant_factors) {
    if (!out.empty()) out += " + ";
    out += (f == 0) ? "Z" : "Z/" + f.get_str();
  }
  return out;
}

namespace {

void pad(std::string& s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
}

std::string row(std::string step, std::string move, std::string det,
                std::string h1, const std::string& flags) {
  pad(step, 6);
  pad(move, 34);
  pad(det, 8);
  pad(h1, 12);
  return step + move + det + h1 + flags + "\n";
}

}  // namespace

std::string render_table(const MoveScript& s, const VerificationReport& r) {
  std::string out = row("step", "move", "det", "H1", "flags");
  out += row("0", "(initial)", r.det_trace.empty() ? "" : r.det_trace[0].get_str(),
             r.homology_trace.empty() ? "" : group_name(r.homology_trace[0]), "");
  for (std::size_t i = 1; i < r.homology_trace.size(); ++i) {
    std::string flags;
    for (const auto& rs : r.retype_steps)
      if (rs.step == i) flags = "axiom: " + rs.justification;
    out += row(std::to_string(i), describe(s.moves[i - 1]),
               r.det_trace[i].get_str(), group_name(r.homology_trace[i]), flags);
  }
  if (r.failure)
    out += "failure at step " + std::to_string(r.failure->step) + ": " +
           r.failure->reason + "\n";
  out += std::string("result: ") + (r.ok ? "ok" : "FAILED") + " (" +
         std::to_string(r.steps_checked) + " of " +
         std::to_string(s.moves.size()) + " moves replayed)\n";
  return out;
}

std::string render_table(const FamilyCertificate& c) {
  std::ostringstream out;
  out << "family certificate for n=" << c.params.n << ", k=" << c.params.k
      << "\n";
  const auto& p = c.properties;
  out << "  (i)   non-trivial surgery yields S^3 : "
      << (p.nontrivial_surgery_yields_s3 ? "true" : "false") << "\n";
  out << "  (ii)  distinct hyperbolic components : "
      << (p.components_distinct_hyperbolic ? "true" : "false") << "\n";
  out << "  (iii) unsplittable                   : "
      << (p.unsplittable ? "true" : "false") << "\n";
  out << "  (iv)  tunnel number exact            : "
      << (p.tunnel_number_exact ? "true" : "false") << " (tunnel number "
      << c.tunnel_number << ")\n";
  out << "component classes:\n";
  for (const auto& cls : c.component_classes)
    out << "  S(" << cls.p << "," << cls.q_canonical << ")"
        << (is_hyperbolic(cls) ? "  hyperbolic" : "") << "\n";
  out << "script: " << c.script.moves.size() << " moves, "
      << c.retype_axioms.size() << " retype axioms, verification "
      << (c.s3_report.ok ? "ok" : "FAILED") << "\n";
  for (const auto& a : c.retype_axioms)
    out << "  axiom (step " << a.step << "): " << a.justification << "\n";
  for (const auto& f : c.cited_facts) out << "  cited: " << f << "\n";
  return out.str();
}

}  // namespace kirby
