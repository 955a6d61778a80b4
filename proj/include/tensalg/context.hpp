#pragma once

#include <vector>

#include "tensalg/linalg.hpp"
#include "tensalg/partition.hpp"

namespace tensalg {

using WeightVec = std::vector<int>;

/*
 * Finite-rank realization g_n in {sl(n), o(2n), sp(2n)} acting on V with a
 * split form:
 *   sl:    V = span(e_1..e_n), dual pairing <e_i, e_j*> = delta_ij
 *   o(2n): <e_i, e_j> = delta_{i+j, 2n+1}
 *   sp(2n):<e_i, e_j> = delta_{i+j, 2n+1} * sign(j - i)
 * Weights are gl(n)-weights for sl and eps-coordinates for o/sp, so basis
 * vectors are weight vectors and all constructed operators preserve the
 * weight grading.
 */
struct FiniteRankContext {
  GType g;
  int n;  // rank parameter

  int dimV() const { return g == GType::sl ? n : 2 * n; }
  // form value <e_i, e_j> (o/sp only; 1-based)
  int form(int i, int j) const;
  // weight of e_i (length n); for sl the weight of e_j* is the negative
  WeightVec weight_of_e(int i) const;

  bool operator==(const FiniteRankContext&) const = default;
  auto operator<=>(const FiniteRankContext&) const = default;
};

// dense matrix on V as sparse columns: col[i] = image of e_{i+1}
struct VMatrix {
  int dim = 0;
  std::vector<SparseVec> cols;  // keys are 0-based basis indices
};

// Chevalley generators (e_alpha and f_alpha for every simple root) of g_n on V
std::vector<VMatrix> chevalley_generators(const FiniteRankContext& ctx);

}  // namespace tensalg
