#pragma once

#include <vector>

#include "tensalg/equivariant.hpp"

namespace tensalg {

/*
 * The candidate basis of (A_g)^{p,q}_i predicted by the stable theory:
 * i-fold contraction composites precomposed with place permutations, one
 * representative per distinct composite.  Sizes: p! q! / i! for sl and
 * p! / (2^i i!) for o/sp.  Linear independence is verified exactly at the
 * given finite rank; failure throws (raise the rank).
 */
struct StableHomBasis {
  TensorSpace src, dst;
  std::vector<EquivariantMap> maps;
};

StableHomBasis stable_hom_basis(int p, int q, int i, const FiniteRankContext& ctx);

// expected stable dimension of Hom_g(T^{p,q}, T^{p-i,q-i})
Int stable_hom_dimension(GType g, int p, int q, int i);

}  // namespace tensalg
