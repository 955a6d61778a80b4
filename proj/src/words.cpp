#include "tensalg/words.hpp"

#include <stdexcept>

namespace tensalg {

EquivariantMap compile_word(const RelationWord& word, const TensorSpace& domain) {
  EquivariantMap m = EquivariantMap::identity(domain);
  for (auto it = word.factors.rbegin(); it != word.factors.rend(); ++it) {
    const TensorSpace& cur = m.dst();
    EquivariantMap f = [&]() {
      switch (it->kind) {
        case WordFactor::Kind::Phi:
          return EquivariantMap::contraction_phi(it->i, it->j, cur);
        case WordFactor::Kind::Psi:
          return EquivariantMap::contraction_psi(it->i, it->j, cur);
        case WordFactor::Kind::Perm:
          return EquivariantMap::permutation_action(it->sigma_p, it->sigma_q, cur);
        case WordFactor::Kind::Elem:
          return EquivariantMap::algebra_action(it->elem, cur);
      }
      throw std::logic_error("unreachable");
    }();
    m = f.compose_after(m);
  }
  return m.operator*(word.coeff);
}

bool verify_relation(const std::vector<RelationWord>& words, const TensorSpace& domain) {
  if (words.empty()) return true;
  EquivariantMap total = compile_word(words[0], domain);
  for (size_t k = 1; k < words.size(); ++k) {
    EquivariantMap m = compile_word(words[k], domain);
    if (!(m.src() == total.src()) || !(m.dst() == total.dst()))
      throw std::invalid_argument("words have mismatched source or target spaces");
    total = total + m;
  }
  return total.is_zero();
}

}  // namespace tensalg
