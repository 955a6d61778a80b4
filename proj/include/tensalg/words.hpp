#pragma once

#include <string>
#include <vector>

#include "tensalg/equivariant.hpp"

namespace tensalg {

/*
 * Formal sums of contraction/permutation composites, checked as exact matrix
 * identities at finite rank.  Factors are written in composition order (the
 * rightmost factor acts first, as in phi_{p-1,q-1} phi_{p,q} sigma); the
 * contraction indices refer to the slots of the space the factor acts on.
 */
struct WordFactor {
  enum class Kind { Phi, Psi, Perm, Elem } kind;
  int i = 0, j = 0;          // contractions
  Permutation sigma_p, sigma_q;  // Perm
  GroupAlgebraElement elem;  // Elem: linear combination of place permutations

  static WordFactor phi(int i, int j) { return {Kind::Phi, i, j, {}, {}, {}}; }
  static WordFactor psi(int i, int j) { return {Kind::Psi, i, j, {}, {}, {}}; }
  static WordFactor perm(Permutation sp, Permutation sq) {
    return {Kind::Perm, 0, 0, std::move(sp), std::move(sq), {}};
  }
  static WordFactor elem_of(GroupAlgebraElement x) {
    return {Kind::Elem, 0, 0, {}, {}, std::move(x)};
  }
};

struct RelationWord {
  Rat coeff = 1;
  std::vector<WordFactor> factors;
};

// compile one word on the given domain
EquivariantMap compile_word(const RelationWord& word, const TensorSpace& domain);

// true iff the matrix of the formal sum vanishes exactly; throws on shape
// mismatch between the words
bool verify_relation(const std::vector<RelationWord>& words, const TensorSpace& domain);

}  // namespace tensalg
