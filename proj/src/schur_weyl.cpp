#include "tensalg/schur_weyl.hpp"

#include <stdexcept>

namespace tensalg {

bool schur_weyl_check(int p, int q, const FiniteRankContext& ctx) {
  if (ctx.g != GType::sl) throw std::invalid_argument("schur_weyl_check needs the sl context");
  if (ctx.n < std::max(p, q)) throw std::invalid_argument("rank below threshold");
  Int lhs = 1;
  for (int k = 0; k < p + q; ++k) lhs *= ctx.n;
  Int rhs = 0;
  for (const Partition& l1 : partitions_of(p))
    for (const Partition& l2 : partitions_of(q)) {
      if (l1.length() > ctx.n || l2.length() > ctx.n) continue;
      Int dim1 = weyl_dim(RootType::A, ctx.n, weight_of_partition(l1, ctx.n));
      Int dim2 = weyl_dim(RootType::A, ctx.n, weight_of_partition(l2, ctx.n));
      rhs += symmetric_group_dim(l1) * symmetric_group_dim(l2) * dim1 * dim2;
    }
  return lhs == rhs;
}

}  // namespace tensalg
