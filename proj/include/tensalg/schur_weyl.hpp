#pragma once

#include "tensalg/context.hpp"
#include "tensalg/weyl.hpp"

namespace tensalg {

/*
 * dim T^{p,q}_n = sum over (l1 |- p, l2 |- q) of d_{l1} d_{l2} *
 * dim((V_n)_{l1}) * dim((V_n)_{l2}^*), with irreducible dimensions from the
 * Weyl dimension formula.  sl context, n >= max(p, q) required so every
 * partition fits.
 */
bool schur_weyl_check(int p, int q, const FiniteRankContext& ctx);

}  // namespace tensalg
