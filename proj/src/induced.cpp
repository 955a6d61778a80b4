#include "tensalg/induced.hpp"

#include <map>
#include <stdexcept>

namespace tensalg {

GroupAlgebraElement subgroup_character_idempotent(const std::vector<Permutation>& generators,
                                                  const std::vector<int>& generator_values,
                                                  GroupShape ambient, long expected_order) {
  if (generators.size() != generator_values.size())
    throw std::invalid_argument("one character value per generator required");
  for (size_t i = 0; i < generators.size(); ++i) {
    if (!ambient.contains(generators[i]))
      throw std::invalid_argument("generator not in the ambient group");
    if (generator_values[i] != 1 && generator_values[i] != -1)
      throw std::invalid_argument("character values must be +-1");
  }
  // close the subgroup, carrying character values along
  std::map<Permutation, int> chi;
  Permutation id = Permutation::identity(ambient.degree());
  chi[id] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<Permutation, int>> snapshot(chi.begin(), chi.end());
    for (const auto& [s, v] : snapshot)
      for (size_t i = 0; i < generators.size(); ++i) {
        Permutation t = generators[i].after(s);
        int tv = generator_values[i] * v;
        auto it = chi.find(t);
        if (it == chi.end()) {
          chi.emplace(t, tv);
          grew = true;
        } else if (it->second != tv) {
          throw std::invalid_argument("character is not well-defined on the subgroup");
        }
      }
  }
  if (expected_order > 0 && static_cast<long>(chi.size()) != expected_order)
    throw std::invalid_argument("generators do not generate a subgroup of the stated order");
  GroupAlgebraElement e(ambient);
  Rat inv_order = Rat(1) / Rat(static_cast<long>(chi.size()));
  for (const auto& [s, v] : chi) e.add(s, inv_order * v);  // chi(s)^{-1} = chi(s) for +-1
  return e;
}

RightIdeal induced_right_ideal(const std::vector<Permutation>& generators,
                               const std::vector<int>& generator_values, GroupShape ambient,
                               long expected_order) {
  GroupAlgebraElement e =
      subgroup_character_idempotent(generators, generator_values, ambient, expected_order);
  return RightIdeal::generated_by(ambient, {e});
}

}  // namespace tensalg
