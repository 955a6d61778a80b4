#include "tensalg/stable_hom.hpp"

#include <set>
#include <stdexcept>

#include "tensalg/linalg.hpp"
#include "tensalg/words.hpp"

namespace tensalg {

Int stable_hom_dimension(GType g, int p, int q, int i) {
  if (g == GType::sl) {
    if (i > std::min(p, q)) return 0;
    Int r = factorial(p) * factorial(q);
    return r / factorial(i);
  }
  if (2 * i > p) return 0;
  Int r = factorial(p);
  Int d = factorial(i);
  for (int k = 0; k < i; ++k) d *= 2;
  return r / d;
}

StableHomBasis stable_hom_basis(int p, int q, int i, const FiniteRankContext& ctx) {
  if (ctx.g != GType::sl && q != 0) throw std::invalid_argument("o/sp has no dual factors");
  if (i < 0 || (ctx.g == GType::sl && (p - i < 0 || q - i < 0)) ||
      (ctx.g != GType::sl && p - 2 * i < 0))
    throw std::invalid_argument("degree out of range");
  TensorSpace src(ctx, p, q);
  TensorSpace dst(ctx, ctx.g == GType::sl ? p - i : p - 2 * i, ctx.g == GType::sl ? q - i : 0);

  // base composite: contract the last slots i times
  std::vector<WordFactor> base;
  for (int k = 0; k < i; ++k) {
    // after k contractions the space is T^{p-k,q-k} (sl) or T^{p-2k} (o/sp);
    // composing right-to-left, the first factor applied acts on T^{p,q}
    if (ctx.g == GType::sl)
      base.insert(base.begin(), WordFactor::phi(p - k, q - k));
    else
      base.insert(base.begin(), WordFactor::psi(p - 2 * k - 1, p - 2 * k));
  }

  // signature of the composite after precomposition by g: the matched slot
  // pairs plus the arrangement of the surviving slots
  using Signature = std::pair<std::set<std::pair<int, int>>, std::vector<int>>;
  std::set<Signature> seen;
  StableHomBasis out{src, dst, {}};

  GroupShape shape{p, ctx.g == GType::sl ? q : -1};
  for (const Permutation& g : enumerate_group(shape)) {
    Permutation ginv = g.inverse();
    Signature sig;
    if (ctx.g == GType::sl) {
      for (int k = 0; k < i; ++k)
        sig.first.insert({ginv.apply(p - k), ginv.apply(p + q - k) - p});
      for (int k = 1; k <= p - i; ++k) sig.second.push_back(ginv.apply(k));
      for (int k = 1; k <= q - i; ++k) sig.second.push_back(ginv.apply(p + k) - p);
    } else {
      for (int k = 0; k < i; ++k) {
        int a = ginv.apply(p - 2 * k - 1), b = ginv.apply(p - 2 * k);
        sig.first.insert({std::min(a, b), std::max(a, b)});
      }
      for (int k = 1; k <= p - 2 * i; ++k) sig.second.push_back(ginv.apply(k));
    }
    if (!seen.insert(sig).second) continue;
    RelationWord word;
    word.factors = base;
    Permutation gp = Permutation::identity(p), gq = Permutation::identity(q);
    std::vector<int> pi, qi;
    for (int k = 1; k <= p; ++k) pi.push_back(g.apply(k));
    gp = Permutation::from_images(pi);
    if (ctx.g == GType::sl && q > 0) {
      for (int k = 1; k <= q; ++k) qi.push_back(g.apply(p + k) - p);
      gq = Permutation::from_images(qi);
    }
    word.factors.push_back(WordFactor::perm(gp, gq));
    out.maps.push_back(compile_word(word, src));
  }

  Int expected = stable_hom_dimension(ctx.g, p, q, i);
  if (Int(static_cast<long>(out.maps.size())) != expected)
    throw std::logic_error("composite enumeration does not match the stable count");

  RowSpace rs;
  for (const auto& m : out.maps)
    if (!rs.insert(m.functional_vector()))
      throw std::runtime_error("insufficient rank for independence; raise n");
  return out;
}

}  // namespace tensalg
