#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "kirbycalc/knot_tag.hpp"
#include "kirbycalc/matrix.hpp"
#include "kirbycalc/slope.hpp"

namespace kirby {

struct Component {
  int id = 0;
  KnotTag knot;
  Slope slope;

  friend bool operator==(const Component& a, const Component& b) {
    return a.id == b.id && a.knot == b.knot && a.slope == b.slope;
  }
};

/// Surgery presentation of a closed 3-manifold: an ordered list of framed
/// link components (knot tag + slope) together with the symmetric linking
/// matrix. The matrix diagonal is identically zero; framing data lives in
/// the slopes. Presentations are immutable values — every move produces a
/// new presentation. The empty presentation is S^3.
class SurgeryPresentation {
 public:
  SurgeryPresentation() = default;

  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const std::vector<Component>& components() const { return components_; }
  const IntMat& linking() const { return linking_; }
  const Component& at(std::size_t pos) const { return components_[pos]; }

  bool has_id(int id) const;
  std::size_t position_of(int id) const;  // throws UnknownId
  const Component& component(int id) const { return components_[position_of(id)]; }
  const Int& lk(int id_a, int id_b) const {
    return linking_.at(position_of(id_a), position_of(id_b));
  }
  int max_id() const;

  friend bool operator==(const SurgeryPresentation& a,
                         const SurgeryPresentation& b) {
    return a.components_ == b.components_ && a.linking_ == b.linking_;
  }

 private:
  SurgeryPresentation(std::vector<Component> components, IntMat linking)
      : components_(std::move(components)), linking_(std::move(linking)) {}
  friend SurgeryPresentation assemble_presentation(std::vector<Component>,
                                                   IntMat);
  std::vector<Component> components_;
  IntMat linking_;
};

/// Validates and builds a presentation, assigning fresh sequential ids 1..n.
/// Rejects non-square/asymmetric/nonzero-diagonal linking data and size
/// mismatches.
SurgeryPresentation new_presentation(
    std::vector<std::pair<KnotTag, Slope>> components, IntMat linking);

/// Same validation but with caller-supplied component ids (must be unique).
/// Used by moves and by deserialization.
SurgeryPresentation assemble_presentation(std::vector<Component> components,
                                          IntMat linking);

/// Framed linking matrix of an integral presentation: framings on the
/// diagonal, linking numbers off it. Defined only when every slope has
/// denominator 1.
IntMat framed_linking_matrix(const SurgeryPresentation& p);

/// First-homology relation matrix for rational surgery coefficients:
/// M(i,i) = num_i, M(i,j) = den_i * lk(i,j). Coincides with the framed
/// linking matrix on integral presentations. Rejects meridional slopes.
IntMat generalized_relation_matrix(const SurgeryPresentation& p);

/// Relation matrix with meridional components contributing the unit row
/// (trivial filling); total on all presentations. This is what the formula
/// above yields at slope (1,0), so the two agree wherever both are defined.
IntMat relation_matrix_filled(const SurgeryPresentation& p);

/// Equality of the framed data in listed order, ignoring component ids.
bool same_up_to_ids(const SurgeryPresentation& a, const SurgeryPresentation& b);

}  // namespace kirby
