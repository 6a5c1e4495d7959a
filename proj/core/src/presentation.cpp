#include "kirbycalc/presentation.hpp"

#include <set>
#include <string>

#include "kirbycalc/error.hpp"

namespace kirby {

bool SurgeryPresentation::has_id(int id) const {
  for (const auto& c : components_)
    if (c.id == id) return true;
  return false;
}

std::size_t SurgeryPresentation::position_of(int id) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].id == id) return i;
  fail(Errc::UnknownId, "component " + std::to_string(id));
}

int SurgeryPresentation::max_id() const {
  int m = 0;
  for (const auto& c : components_)
    if (c.id > m) m = c.id;
  return m;
}

SurgeryPresentation assemble_presentation(std::vector<Component> components,
                                          IntMat linking) {
  const std::size_t n = components.size();
  if (linking.rows() != n || linking.cols() != n)
    fail(Errc::DimensionMismatch,
         std::to_string(n) + " components, " + std::to_string(linking.rows()) +
             "x" + std::to_string(linking.cols()) + " linking matrix");
  if (!linking.is_symmetric()) fail(Errc::AsymmetricMatrix);
  if (!linking.has_zero_diagonal()) fail(Errc::NonzeroDiagonal);
  std::set<int> ids;
  for (const auto& c : components)
    if (!ids.insert(c.id).second)
      fail(Errc::InvalidParams, "duplicate id " + std::to_string(c.id));
  return SurgeryPresentation(std::move(components), std::move(linking));
}

SurgeryPresentation new_presentation(
    std::vector<std::pair<KnotTag, Slope>> components, IntMat linking) {
  std::vector<Component> comps;
  comps.reserve(components.size());
  int id = 1;
  for (auto& [knot, slope] : components)
    comps.push_back({id++, std::move(knot), std::move(slope)});
  return assemble_presentation(std::move(comps), std::move(linking));
}

IntMat framed_linking_matrix(const SurgeryPresentation& p) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Slope& s = p.at(i).slope;
    if (s.is_meridional())
      fail(Errc::Meridional, "component " + std::to_string(p.at(i).id));
    if (!s.is_integral())
      fail(Errc::NonIntegral, "component " + std::to_string(p.at(i).id));
  }
  IntMat m = p.linking();
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = p.at(i).slope.num();
  return m;
}

IntMat relation_matrix_filled(const SurgeryPresentation& p) {
  const std::size_t n = p.size();
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Slope& s = p.at(i).slope;
    m.at(i, i) = s.num();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) m.at(i, j) = s.den() * p.linking().at(i, j);
  }
  return m;
}

IntMat generalized_relation_matrix(const SurgeryPresentation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p.at(i).slope.is_meridional())
      fail(Errc::Meridional, "component " + std::to_string(p.at(i).id));
  return relation_matrix_filled(p);
}

bool same_up_to_ids(const SurgeryPresentation& a,
                    const SurgeryPresentation& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a.at(i).knot == b.at(i).knot)) return false;
    if (!(a.at(i).slope == b.at(i).slope)) return false;
  }
  return a.linking() == b.linking();
}

}  // namespace kirby
