#pragma once

#include <map>
#include <optional>

#include "tensalg/group_algebra.hpp"
#include "tensalg/tensor_space.hpp"

namespace tensalg {

/*
 * Exact sparse g_n-equivariant maps between tensor spaces: contractions,
 * place permutations, and their compositions and sums.  Columns are stored
 * sparsely (absent = zero), so contractions on large spaces stay cheap.
 */
class EquivariantMap {
 public:
  EquivariantMap(TensorSpace src, TensorSpace dst) : src_(std::move(src)), dst_(std::move(dst)) {}

  // phi_{i,j}: pairs v-slot i with dual slot j (sl only)
  static EquivariantMap contraction_phi(int i, int j, const TensorSpace& space);
  // psi_{i,j}, i < j: pairs slots i and j through the form (o/sp only)
  static EquivariantMap contraction_psi(int i, int j, const TensorSpace& space);
  // place permutation: sigma_p on the v-slots and sigma_q on the dual slots
  static EquivariantMap permutation_action(const Permutation& sigma_p, const Permutation& sigma_q,
                                           const TensorSpace& space);
  // linear extension of the place permutation action to a group algebra element
  static EquivariantMap algebra_action(const GroupAlgebraElement& x, const TensorSpace& space);
  static EquivariantMap identity(const TensorSpace& space);
  // derivation action of a Lie algebra element given on V (dual twist on the
  // dual slots)
  static EquivariantMap lie_action(const VMatrix& X, const TensorSpace& space);

  const TensorSpace& src() const { return src_; }
  const TensorSpace& dst() const { return dst_; }

  SparseVec apply(long src_index) const;
  SparseVec apply(const SparseVec& v) const;

  EquivariantMap compose_after(const EquivariantMap& first) const;  // (*this) o first
  EquivariantMap operator+(const EquivariantMap& o) const;
  EquivariantMap operator*(const Rat& c) const;

  bool is_zero() const;
  bool operator==(const EquivariantMap& o) const;
  long rank() const;

  // the map flattened to a single sparse vector (for independence checks)
  SparseVec functional_vector() const;

  // exact check that the map commutes with every Chevalley generator of g_n
  bool commutes_with_generators() const;

 private:
  TensorSpace src_, dst_;
  std::map<long, SparseVec> cols_;
};

}  // namespace tensalg
