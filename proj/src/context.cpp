#include "tensalg/context.hpp"

#include <stdexcept>

namespace tensalg {

int FiniteRankContext::form(int i, int j) const {
  if (g == GType::sl) throw std::invalid_argument("sl has no bilinear form on V");
  int d = dimV();
  if (i + j != d + 1) return 0;
  if (g == GType::o) return 1;
  return j > i ? 1 : -1;
}

WeightVec FiniteRankContext::weight_of_e(int i) const {
  WeightVec w(n, 0);
  if (g == GType::sl) {
    w[i - 1] = 1;
  } else {
    if (i <= n)
      w[i - 1] = 1;
    else
      w[2 * n - i] = -1;  // e_i has weight -eps_{2n+1-i}
  }
  return w;
}

namespace {

VMatrix elementary(int dim, int r, int c, int coef) {  // coef * E_{rc} (1-based)
  VMatrix m;
  m.dim = dim;
  m.cols.resize(dim);
  m.cols[c - 1].emplace_back(r - 1, Rat(coef));
  return m;
}

VMatrix add(VMatrix a, const VMatrix& b) {
  for (int i = 0; i < a.dim; ++i) a.cols[i] = axpy(a.cols[i], Rat(1), b.cols[i]);
  return a;
}

}  // namespace

std::vector<VMatrix> chevalley_generators(const FiniteRankContext& ctx) {
  std::vector<VMatrix> out;
  int d = ctx.dimV();
  auto E = [&](int r, int c, int coef) { return elementary(d, r, c, coef); };
  if (ctx.g == GType::sl) {
    for (int i = 1; i < ctx.n; ++i) {
      out.push_back(E(i, i + 1, 1));  // e_i
      out.push_back(E(i + 1, i, 1));  // f_i
    }
    return out;
  }
  int n = ctx.n;
  auto prime = [&](int a) { return 2 * n + 1 - a; };
  // X_{ab} = E_{ab} - c E_{b'a'} preserves the form; c = 1 for o and
  // c = sign(a'-a) sign(b'-b) for sp (a != b').
  auto gen = [&](int a, int b) {
    if (ctx.g == GType::o) {
      if (b == prime(a)) return E(a, b, 0);  // no such root in D_n
      return add(E(a, b, 1), E(prime(b), prime(a), -1));
    }
    if (b == prime(a)) return E(a, b, 1);  // long root generator E_{a,a'}
    int c = ((prime(a) > a) ? 1 : -1) * ((prime(b) > b) ? 1 : -1);
    return add(E(a, b, 1), E(prime(b), prime(a), -c));
  };
  for (int i = 1; i < n; ++i) {
    out.push_back(gen(i, i + 1));  // eps_i - eps_{i+1}
    out.push_back(gen(i + 1, i));
  }
  if (ctx.g == GType::o) {
    if (n >= 2) {
      out.push_back(gen(n - 1, prime(n)));  // eps_{n-1} + eps_n
      out.push_back(gen(prime(n), n - 1));
    }
  } else {
    out.push_back(gen(n, prime(n)));  // 2 eps_n
    out.push_back(gen(prime(n), n));
  }
  return out;
}

}  // namespace tensalg
