#pragma once

#include <functional>
#include <map>
#include <vector>

#include "tensalg/group_algebra.hpp"
#include "tensalg/linalg.hpp"

namespace tensalg {

/*
 * Subspaces of C[S_p] / C[S_p x S_q] closed under right multiplication,
 * stored as an echelonized basis over the group-element coordinates.
 */
class RightIdeal {
 public:
  explicit RightIdeal(GroupShape shape) : shape_(shape) {}

  // Right ideal generated by the given elements (closure under right
  // multiplication by group elements).
  static RightIdeal generated_by(GroupShape shape, const std::vector<GroupAlgebraElement>& gens);
  // Span of the given elements, without closure.  closed_under_right_action()
  // can be used to validate.
  static RightIdeal span_of(GroupShape shape, const std::vector<GroupAlgebraElement>& gens);
  static RightIdeal full(GroupShape shape);  // the whole group algebra

  const GroupShape& shape() const { return shape_; }
  int dim() const { return rows_.rank(); }
  bool contains(const GroupAlgebraElement& x) const;
  bool contains_ideal(const RightIdeal& other) const;
  bool equals(const RightIdeal& other) const;
  bool closed_under_right_action() const;

  std::vector<GroupAlgebraElement> basis() const;

  // sum / intersection inside C[group]
  RightIdeal sum(const RightIdeal& other) const;
  RightIdeal intersect(const RightIdeal& other) const;

  // image under a linear map of the group algebra (e.g. the sign twist)
  RightIdeal map(const std::function<GroupAlgebraElement(const GroupAlgebraElement&)>& f) const;

  // decomposition of the right module into irreducibles, by character inner
  // products (traces of right multiplication)
  std::map<Partition, long> decompose() const;        // plain S_p
  std::map<BiPartition, long> decompose_bi() const;   // either shape

  // isotypic component: image under left multiplication by the central
  // idempotent of the label
  RightIdeal isotypic(const BiPartition& label) const;
  RightIdeal isotypic(const Partition& label) const { return isotypic(BiPartition(label, {})); }

  // orthogonal complement of *this inside ambient, for the symmetrizing trace
  // form (coefficientwise dot product)
  RightIdeal orthogonal_complement_in(const RightIdeal& ambient) const;

  GroupAlgebraElement from_coords(const SparseVec& v) const;
  SparseVec to_coords(const GroupAlgebraElement& x) const;

 private:
  GroupShape shape_;
  RowSpace rows_;
};

// central idempotent z_label = (d/|G|) sum_g chi(g^{-1}) g
GroupAlgebraElement central_idempotent(const GroupShape& shape, const BiPartition& label);

}  // namespace tensalg
