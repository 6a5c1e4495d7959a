#include "kirbycalc/family.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "kirbycalc/error.hpp"

namespace kirby {

namespace {

void check(const FamilyParams& params) {
  if (params.n < 2)
    fail(Errc::InvalidParams, "n must be >= 2, got " + std::to_string(params.n));
  if (params.k < 0)
    fail(Errc::InvalidParams, "k must be >= 0, got " + params.k.get_str());
}

KnotTag band_knot(int i, const Int& k) {
  const Int m = i + k;
  return KnotTag::two_bridge(1 + 20 * m, 2 - 10 * m);
}

const char* kBandRetype =
    "inverse slide over K1 undoes the band sum; the component is a meridian "
    "again, hence an unknot";
const char* kUnknottingRetype =
    "the figure-eight knot has unknotting number one; the crossing change "
    "realized by sliding across the zero-framed meridian K2 unknots K1";
const char* kTunnelFact =
    "upper bound: the n-1 arcs joining K1 to each banded component form an "
    "unknotting tunnel system (diagrammatic fact, cited not checked)";

// True iff the graph on components with edges {lk != 0} is connected.
bool linking_graph_connected(const SurgeryPresentation& p) {
  const std::size_t n = p.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j)
      if (!seen[j] && p.linking().at(i, j) != 0) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
  }
  return reached == n;
}

}  // namespace

SurgeryPresentation base_presentation(const FamilyParams& params) {
  check(params);
  const int n = params.n;
  std::vector<std::pair<KnotTag, Slope>> comps;
  comps.reserve(n);
  comps.emplace_back(KnotTag::figure_eight(), Slope::integral(n - 2));
  comps.emplace_back(KnotTag::unknot(), Slope::integral(0));
  for (int i = 3; i <= n; ++i)
    comps.emplace_back(KnotTag::unknot(), Slope::integral(1));
  IntMat linking(n, n);
  for (int i = 1; i < n; ++i) {
    linking.at(0, i) = 1;
    linking.at(i, 0) = 1;
  }
  return new_presentation(std::move(comps), std::move(linking));
}

SurgeryPresentation final_presentation(const FamilyParams& params) {
  check(params);
  const int n = params.n;
  std::vector<std::pair<KnotTag, Slope>> comps;
  comps.reserve(n);
  comps.emplace_back(KnotTag::figure_eight(), Slope::integral(n - 2));
  comps.emplace_back(band_knot(2, params.k), Slope::integral(n));
  for (int i = 3; i <= n; ++i)
    comps.emplace_back(band_knot(i, params.k), Slope::integral(n + 1));
  IntMat linking(n, n);
  for (int i = 1; i < n; ++i) {
    linking.at(0, i) = n - 1;
    linking.at(i, 0) = n - 1;
    for (int j = i + 1; j < n; ++j) {
      linking.at(i, j) = n;
      linking.at(j, i) = n;
    }
  }
  return new_presentation(std::move(comps), std::move(linking));
}

MoveScript reduction_script(const FamilyParams& params) {
  check(params);
  const int n = params.n;
  MoveScript s;
  s.initial = final_presentation(params);
  // Undo the band sums: each slide restores the meridian and drops the
  // linking with K1 back to 1.
  for (int i = 2; i <= n; ++i) {
    s.moves.emplace_back(HandleSlide{i, 1, -1});
    s.moves.emplace_back(Retype{i, KnotTag::unknot(), kBandRetype});
  }
  // Collapse the base presentation: the (+1)-framed meridians peel off K1.
  for (int c = n; c >= 3; --c) s.moves.emplace_back(BlowDown{c});
  s.moves.emplace_back(RolfsenTwist{2, Int(-1)});
  s.moves.emplace_back(Retype{1, KnotTag::unknot(), kUnknottingRetype});
  s.moves.emplace_back(BlowDown{1});
  s.moves.emplace_back(BlowDown{2});
  s.claimed_final = SurgeryPresentation();
  s.comment =
      "route: inverse slides reach the meridian form, blow-downs and a "
      "(-1)-twist empty the Hopf form with coefficients (0,0); an equivalent "
      "reduction passes through the Hopf link with coefficients (0,2)";
  return s;
}

std::vector<TwoBridgeClass> component_classes(const FamilyParams& params) {
  check(params);
  std::vector<TwoBridgeClass> classes;
  classes.reserve(params.n);
  classes.push_back(normalize(5, 3));  // figure-eight
  for (int i = 2; i <= params.n; ++i) {
    const Int m = i + params.k;
    classes.push_back(normalize(1 + 20 * m, 2 - 10 * m));
  }
  return classes;
}

FamilyCertificate certify(const FamilyParams& params) {
  check(params);
  FamilyCertificate cert;
  cert.params = params;
  cert.presentation = final_presentation(params);
  cert.script = reduction_script(params);
  cert.s3_report = verify_script(cert.script);
  cert.component_classes = component_classes(params);
  cert.retype_axioms = cert.s3_report.retype_steps;
  cert.cited_facts.emplace_back(kTunnelFact);

  bool nontrivial = true;
  for (const auto& comp : cert.presentation.components())
    nontrivial = nontrivial && !comp.slope.is_meridional();
  cert.properties.nontrivial_surgery_yields_s3 = cert.s3_report.ok && nontrivial;

  bool distinct = true;
  for (std::size_t a = 0; a < cert.component_classes.size(); ++a)
    for (std::size_t b = a + 1; b < cert.component_classes.size(); ++b)
      distinct = distinct &&
                 !equivalent(cert.component_classes[a], cert.component_classes[b]);
  bool hyperbolic = true;
  for (const auto& c : cert.component_classes)
    hyperbolic = hyperbolic && is_hyperbolic(c);
  cert.properties.components_distinct_hyperbolic = distinct && hyperbolic;

  cert.properties.unsplittable = linking_graph_connected(cert.presentation);

  // Tunnel number: lower bound components - 1 always; the matching upper
  // bound is the cited tunnel system.
  const Int lower = params.n - 1;
  const Int upper = params.n - 1;
  cert.tunnel_number = upper;
  cert.properties.tunnel_number_exact = (lower == upper);

  return cert;
}

bool distinct_links(const FamilyParams& a, const FamilyParams& b) {
  check(a);
  check(b);
  std::vector<TwoBridgeClass> ca = component_classes(a);
  std::vector<TwoBridgeClass> cb = component_classes(b);
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return !(ca == cb);
}

}  // namespace kirby
