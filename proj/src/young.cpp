#include "tensalg/young.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tensalg {

namespace {

// sum over all permutations of the given letters (inside the ambient group),
// weighted by sign if signed_sum
GroupAlgebraElement symmetrizer(const std::vector<int>& letters, bool signed_sum,
                                const GroupShape& ambient) {
  int deg = ambient.degree();
  std::vector<int> perm = letters;
  std::sort(perm.begin(), perm.end());
  GroupAlgebraElement out(ambient);
  std::vector<int> sorted = perm;
  do {
    std::vector<int> imgs(deg);
    for (int i = 0; i < deg; ++i) imgs[i] = i + 1;
    for (size_t i = 0; i < sorted.size(); ++i) imgs[sorted[i] - 1] = perm[i];
    Permutation g = Permutation::from_images(imgs);
    out.add(g, signed_sum ? Rat(g.sign()) : Rat(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

GroupAlgebraElement young_projector(const Partition& mu, const std::vector<int>& letters,
                                    const GroupShape& ambient) {
  if (static_cast<int>(letters.size()) != mu.size())
    throw std::invalid_argument("letter set size must equal |mu|");
  std::set<int> uniq(letters.begin(), letters.end());
  if (static_cast<int>(uniq.size()) != mu.size())
    throw std::invalid_argument("letters must be distinct");
  for (int l : letters)
    if (l < 1 || l > ambient.degree()) throw std::invalid_argument("letter out of range");

  // fill row-major with letters in decreasing order
  std::vector<int> desc(uniq.rbegin(), uniq.rend());
  std::vector<std::vector<int>> rows(mu.length());
  size_t k = 0;
  for (int i = 0; i < mu.length(); ++i)
    for (int j = 0; j < mu.parts()[i]; ++j) rows[i].push_back(desc[k++]);

  GroupAlgebraElement y = GroupAlgebraElement::unit(ambient);
  for (const auto& row : rows)
    if (row.size() > 1) y = y * symmetrizer(row, false, ambient);
  int ncols = mu.part(0);
  for (int c = 0; c < ncols; ++c) {
    std::vector<int> col;
    for (int i = 0; i < mu.length(); ++i)
      if (mu.parts()[i] > c) col.push_back(rows[i][c]);
    if (col.size() > 1) y = y * symmetrizer(col, true, ambient);
  }
  return y;
}

GroupAlgebraElement young_projector_bi(const BiPartition& label, const GroupShape& ambient) {
  if (!ambient.is_product()) {
    if (label.second().size() != 0)
      throw std::invalid_argument("plain shapes need an empty second component");
    std::vector<int> letters;
    for (int i = 1; i <= ambient.p; ++i) letters.push_back(i);
    return young_projector(label.first(), letters, ambient);
  }
  if (label.first().size() != ambient.p || label.second().size() != ambient.q)
    throw std::invalid_argument("label size must match the shape");
  std::vector<int> lv, lw;
  for (int i = 1; i <= ambient.p; ++i) lv.push_back(i);
  for (int i = 1; i <= ambient.q; ++i) lw.push_back(ambient.p + i);
  GroupAlgebraElement y = GroupAlgebraElement::unit(ambient);
  if (ambient.p > 0) y = y * young_projector(label.first(), lv, ambient);
  if (ambient.q > 0) y = y * young_projector(label.second(), lw, ambient);
  return y;
}

}  // namespace tensalg
