#pragma once

#include <vector>

#include "tensalg/right_ideal.hpp"

namespace tensalg {

/*
 * chi ⊗_{C[S]} C[G] for a one-dimensional character chi of the subgroup S
 * generated by the given elements: the right ideal e C[G] with
 * e = (1/|S|) sum_s chi(s)^{-1} s.  Character values are prescribed (+-1) on
 * the generators and extended multiplicatively; the extension is checked for
 * consistency during the subgroup closure.
 */
RightIdeal induced_right_ideal(const std::vector<Permutation>& generators,
                               const std::vector<int>& generator_values, GroupShape ambient,
                               long expected_order = 0);

// the symmetrizing idempotent itself
GroupAlgebraElement subgroup_character_idempotent(const std::vector<Permutation>& generators,
                                                  const std::vector<int>& generator_values,
                                                  GroupShape ambient, long expected_order = 0);

}  // namespace tensalg
