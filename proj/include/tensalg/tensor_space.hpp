#pragma once

#include <map>
#include <string>
#include <vector>

#include "tensalg/context.hpp"

namespace tensalg {

/*
 * T^{p,q} = V^{otimes p} (x) (V_*)^{otimes q} at finite rank (q = 0 for o/sp).
 * Basis vectors are index tuples (i_1..i_p, j_1..j_q), 1-based entries,
 * flattened v-major; each is a weight vector.
 */
class TensorSpace {
 public:
  TensorSpace(FiniteRankContext ctx, int p, int q);

  const FiniteRankContext& context() const { return ctx_; }
  int p() const { return p_; }
  int q() const { return q_; }
  long dim() const { return dim_; }

  std::vector<int> tuple_of(long index) const;
  long index_of(const std::vector<int>& tuple) const;
  WeightVec weight_of(long index) const;

  // indices grouped by weight, each list ascending (deterministic)
  const std::map<WeightVec, std::vector<long>>& weight_blocks() const;

  bool operator==(const TensorSpace& o) const {
    return ctx_ == o.ctx_ && p_ == o.p_ && q_ == o.q_;
  }
  std::string str() const;

 private:
  FiniteRankContext ctx_;
  int p_, q_;
  long dim_;
  mutable std::map<WeightVec, std::vector<long>> blocks_;  // built lazily
};

}  // namespace tensalg
