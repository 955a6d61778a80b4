#pragma once

#include <vector>

#include "tensalg/group_algebra.hpp"
#include "tensalg/partition.hpp"

namespace tensalg {

/*
 * Young projectors.  The tableau of shape mu on the given letters is filled
 * row-major with the letters in decreasing order, so that on letters
 * {p-3..p}:
 *   Y_{(2,2)}   = (1+(p,p-1))(1+(p-2,p-3))(1-(p-2,p))(1-(p-1,p-3))
 *   Y_{(2,1,1)} = (1+(p-1,p)) (1-(p,p-2)-(p,p-3)-(p-2,p-3)+(p,p-2,p-3)+(p,p-3,p-2))
 *   Y_{(4)}     = sum of all 24 permutations of the letters.
 * The result is the unnormalized product (row symmetrizers) * (column
 * antisymmetrizers); it is quasi-idempotent with Y^2 = (|mu|!/d_mu) Y.
 */
GroupAlgebraElement young_projector(const Partition& mu, const std::vector<int>& letters,
                                    const GroupShape& ambient);

// the projector cutting the (l1, l2)-isotypic injective out of T^{p,q}:
// Y_{l1} on letters 1..p times Y_{l2} on letters p+1..p+q
GroupAlgebraElement young_projector_bi(const BiPartition& label, const GroupShape& ambient);

}  // namespace tensalg
