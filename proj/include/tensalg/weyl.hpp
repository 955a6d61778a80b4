#pragma once

#include <map>

#include "tensalg/context.hpp"
#include "tensalg/partition.hpp"

namespace tensalg {

/*
 * Exact weight multiplicities of finite-dimensional irreducibles by the
 * Freudenthal recursion (types A, C, D on R^n), plus the Weyl dimension
 * formula and greedy highest-weight peeling of module characters.
 */
enum class RootType { A, C, D };

RootType root_type(GType g);  // sl -> A, sp -> C, o -> D

// full weight multiplicity table of the irreducible with the given dominant
// highest weight (integral; type A admits negative entries)
std::map<WeightVec, long> irrep_weight_multiplicities(RootType type, int n,
                                                      const WeightVec& highest);

Int weyl_dim(RootType type, int n, const WeightVec& highest);

// highest weight of V_{l1} (x) (V_{l2})^* for gl(n)
WeightVec mixed_gl_weight(const BiPartition& label, int n);
// inverse: dominant gl-weight -> bipartition
BiPartition bipartition_of_gl_weight(const WeightVec& w);
// dominant o/sp weight -> partition
Partition partition_of_weight(const WeightVec& w);
WeightVec weight_of_partition(const Partition& mu, int n);

using WeightDecomposition = std::map<WeightVec, long>;

// greedy peeling against irreducible characters; throws on negative
// multiplicities (rank too small or not a genuine character)
std::map<BiPartition, long> decompose_gl_character(WeightDecomposition w, int n);
std::map<Partition, long> decompose_osp_character(WeightDecomposition w, RootType type, int n);

}  // namespace tensalg
