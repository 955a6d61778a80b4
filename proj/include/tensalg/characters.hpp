#pragma once

#include "tensalg/group_algebra.hpp"
#include "tensalg/partition.hpp"

namespace tensalg {

/*
 * Symmetric group characters by the Murnaghan-Nakayama recursion, memoized on
 * (shape, cycle type).  The memo table is the only shared mutable state; fills
 * are idempotent and guarded by a mutex (single writer, many readers).
 */
long mn_character(const Partition& shape, const Partition& cycle_type);

// character of the S_p x S_q irreducible (l1, l2) at an element of the given
// cycle type; plain shapes use l2 = [] and the right type must be empty
long character_value(const BiPartition& label, const BiPartition& cycle_type);

// order of the centralizer of an element of the given cycle type in S_n
Int centralizer_order(const Partition& cycle_type);

// <chi_mu, chi_nu> over S_n
Rat character_inner_product(const Partition& mu, const Partition& nu);

}  // namespace tensalg
