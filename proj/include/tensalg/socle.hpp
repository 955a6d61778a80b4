#pragma once

#include <map>
#include <vector>

#include "tensalg/equivariant.hpp"
#include "tensalg/weyl.hpp"

namespace tensalg {

/*
 * Iterated-contraction-kernel filtrations, computed per weight block:
 *   F^0  = joint kernel of all single contractions,
 *   F^k  = { v : c(v) in F^{k-1}(target) for every single contraction c }.
 * The filtration is increasing and exhaustive; layer k is F^k / F^{k-1}.
 * Weight blocks are independent work units and are processed in parallel
 * with a deterministic merge.
 */

// all single contractions out of the space (phi_{i,j} for sl, psi_{i,j} for
// o/sp); empty when none exist
std::vector<EquivariantMap> single_contractions(const TensorSpace& space);

// full-space filtration, cached per space; block(k, w) yields the reduced
// basis of F^k in weight block w (absent blocks are zero)
class SpaceFiltration {
 public:
  static const SpaceFiltration& get(const TensorSpace& space);

  int layers() const { return static_cast<int>(depth_); }
  const RowSpace* block(int k, const WeightVec& w) const;

 private:
  explicit SpaceFiltration(const TensorSpace& space);
  size_t depth_ = 0;  // F^{depth_-1} = whole space
  std::map<WeightVec, std::vector<RowSpace>> blocks_;
};

// a weight-graded subspace of a tensor space
using SubmoduleBlocks = std::map<WeightVec, RowSpace>;

// submodule from spanning vectors (weights read off the indices)
SubmoduleBlocks submodule_from_spanning(const TensorSpace& space,
                                        const std::vector<SparseVec>& spanning);

// image of a Young-projector (group algebra element) on the whole space:
// the isotypic injective submodule
SubmoduleBlocks projector_image(const GroupAlgebraElement& y, const TensorSpace& space);

// filtration of a submodule: result[k] = F^k ∩ W per block; stops once full
struct SubmoduleFiltration {
  TensorSpace space;
  std::map<WeightVec, std::vector<RowSpace>> blocks;
  int layers = 0;

  WeightDecomposition layer_weights(int k) const;  // dims of F^k/F^{k-1}
  long total_dim() const;
  SubmoduleBlocks layer_zero() const;  // F^0 ∩ W, as a submodule
};

SubmoduleFiltration filter_submodule(const TensorSpace& space, const SubmoduleBlocks& w);

// e_i (x) u for all i, embedding V (x) W into T^{p+1,q}
SubmoduleBlocks tensor_with_v(const TensorSpace& small, const SubmoduleBlocks& w);

long submodule_dim(const SubmoduleBlocks& w);

}  // namespace tensalg
