#pragma once

#include <string>
#include <vector>

#include "kirbycalc/moves.hpp"
#include "kirbycalc/twobridge.hpp"

namespace kirby {

/// Parameters of the link family: n >= 2 components, twist offset k >= 0.
struct FamilyParams {
  int n = 2;
  Int k;
};

struct FamilyProperties {
  bool nontrivial_surgery_yields_s3 = false;
  bool components_distinct_hyperbolic = false;
  bool unsplittable = false;
  bool tunnel_number_exact = false;

  bool all() const {
    return nontrivial_surgery_yields_s3 && components_distinct_hyperbolic &&
           unsplittable && tunnel_number_exact;
  }
};

/// Verified bundle for one (n, k): the surgery presentation, the reduction
/// script with its verification report, the component classification, and
/// the four certified properties. Retype steps and cited diagrammatic facts
/// are listed as explicit axioms — they are the parts the engine takes on
/// citation rather than checking.
struct FamilyCertificate {
  FamilyParams params;
  SurgeryPresentation presentation;
  MoveScript script;
  VerificationReport s3_report;
  std::vector<TwoBridgeClass> component_classes;
  FamilyProperties properties;
  Int tunnel_number;
  std::vector<RetypeStep> retype_axioms;
  std::vector<std::string> cited_facts;
};

/// K1 a figure-eight with coefficient n-2 and K2..Kn meridians of K1 with
/// coefficients 0, 1, ..., 1; lk(K1, Ki) = 1, meridians pairwise unlinked.
SurgeryPresentation base_presentation(const FamilyParams& params);

/// The link after banding each meridian to the framing push-off of K1 with
/// i+k full twists in the band: K_i becomes the 2-bridge knot
/// S(1 + 20(i+k), 2 - 10(i+k)), the coefficient becomes n (i = 2) or n+1
/// (i > 2), lk(K1, Ki) = n-1 and lk(Ki, Kj) = n. The band twists change
/// only the knot types, never slopes or linking numbers.
SurgeryPresentation final_presentation(const FamilyParams& params);

/// Script from final_presentation to the empty presentation: inverse
/// slides over K1 (with retypes back to meridians), blow-downs of K3..Kn,
/// a (-1)-twist on K2, the unknotting retype of K1, and two final
/// blow-downs. Passes verify_script with constant trivial homology and
/// exactly n retype axioms.
MoveScript reduction_script(const FamilyParams& params);

std::vector<TwoBridgeClass> component_classes(const FamilyParams& params);

FamilyCertificate certify(const FamilyParams& params);

/// True iff the multisets of component classes differ — a sufficient
/// distinguishing invariant between parameter choices.
bool distinct_links(const FamilyParams& a, const FamilyParams& b);

}  // namespace kirby
