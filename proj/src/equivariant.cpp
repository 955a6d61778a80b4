#include "tensalg/equivariant.hpp"

#include <stdexcept>

#include "tensalg/linalg.hpp"

namespace tensalg {

EquivariantMap EquivariantMap::contraction_phi(int i, int j, const TensorSpace& space) {
  if (space.context().g != GType::sl)
    throw std::invalid_argument("phi contractions require the sl context");
  int p = space.p(), q = space.q();
  if (i < 1 || i > p || j < 1 || j > q) throw std::invalid_argument("phi index out of range");
  TensorSpace dst(space.context(), p - 1, q - 1);
  EquivariantMap m(space, dst);
  for (long s = 0; s < space.dim(); ++s) {
    std::vector<int> t = space.tuple_of(s);
    if (t[i - 1] != t[p + j - 1]) continue;  // <e_a, e_b*> = delta_ab
    std::vector<int> out;
    out.reserve(p + q - 2);
    for (int k = 0; k < p + q; ++k)
      if (k != i - 1 && k != p + j - 1) out.push_back(t[k]);
    m.cols_[s] = SparseVec{{dst.index_of(out), Rat(1)}};
  }
  return m;
}

EquivariantMap EquivariantMap::contraction_psi(int i, int j, const TensorSpace& space) {
  if (space.context().g == GType::sl)
    throw std::invalid_argument("psi contractions require the o/sp context");
  int p = space.p();
  if (i < 1 || j <= i || j > p) throw std::invalid_argument("psi indices need 1 <= i < j <= p");
  TensorSpace dst(space.context(), p - 2, 0);
  EquivariantMap m(space, dst);
  for (long s = 0; s < space.dim(); ++s) {
    std::vector<int> t = space.tuple_of(s);
    int f = space.context().form(t[i - 1], t[j - 1]);
    if (f == 0) continue;
    std::vector<int> out;
    out.reserve(p - 2);
    for (int k = 0; k < p; ++k)
      if (k != i - 1 && k != j - 1) out.push_back(t[k]);
    m.cols_[s] = SparseVec{{dst.index_of(out), Rat(f)}};
  }
  return m;
}

EquivariantMap EquivariantMap::permutation_action(const Permutation& sigma_p,
                                                  const Permutation& sigma_q,
                                                  const TensorSpace& space) {
  int p = space.p(), q = space.q();
  if (sigma_p.degree() != p || sigma_q.degree() != q)
    throw std::invalid_argument("permutation degree mismatch");
  EquivariantMap m(space, space);
  for (long s = 0; s < space.dim(); ++s) {
    std::vector<int> t = space.tuple_of(s);
    std::vector<int> out(p + q);
    for (int k = 1; k <= p; ++k) out[sigma_p.apply(k) - 1] = t[k - 1];
    for (int k = 1; k <= q; ++k) out[p + sigma_q.apply(k) - 1] = t[p + k - 1];
    m.cols_[s] = SparseVec{{space.index_of(out), Rat(1)}};
  }
  return m;
}

EquivariantMap EquivariantMap::algebra_action(const GroupAlgebraElement& x,
                                              const TensorSpace& space) {
  const GroupShape& shape = x.shape();
  int p = space.p(), q = space.q();
  if (shape.p != p || (shape.is_product() ? shape.q : 0) != q)
    throw std::invalid_argument("group shape does not match the tensor space");
  EquivariantMap m(space, space);
  for (long s = 0; s < space.dim(); ++s) {
    std::vector<int> t = space.tuple_of(s);
    SparseVec img;
    for (const auto& [g, c] : x.coeffs()) {
      std::vector<int> out(p + q);
      for (int k = 1; k <= p + q; ++k) out[g.apply(k) - 1] = t[k - 1];
      img = axpy(img, c, SparseVec{{space.index_of(out), Rat(1)}});
    }
    if (!img.empty()) m.cols_[s] = std::move(img);
  }
  return m;
}

EquivariantMap EquivariantMap::identity(const TensorSpace& space) {
  EquivariantMap m(space, space);
  for (long s = 0; s < space.dim(); ++s) m.cols_[s] = SparseVec{{s, Rat(1)}};
  return m;
}

EquivariantMap EquivariantMap::lie_action(const VMatrix& X, const TensorSpace& space) {
  if (X.dim != space.context().dimV()) throw std::invalid_argument("V dimension mismatch");
  int p = space.p(), q = space.q();
  EquivariantMap m(space, space);
  for (long s = 0; s < space.dim(); ++s) {
    std::vector<int> t = space.tuple_of(s);
    SparseVec img;
    for (int k = 0; k < p + q; ++k) {
      int b = t[k];  // 1-based basis index at slot k
      if (k < p) {
        for (const auto& [r, c] : X.cols[b - 1]) {
          std::vector<int> out = t;
          out[k] = static_cast<int>(r) + 1;
          img = axpy(img, c, SparseVec{{space.index_of(out), Rat(1)}});
        }
      } else {
        // X e_b^* = - sum_c X_{bc} e_c^*: run over row b of X
        for (int col = 0; col < X.dim; ++col) {
          for (const auto& [r, c] : X.cols[col]) {
            if (static_cast<int>(r) != b - 1) continue;
            std::vector<int> out = t;
            out[k] = col + 1;
            img = axpy(img, -c, SparseVec{{space.index_of(out), Rat(1)}});
          }
        }
      }
    }
    if (!img.empty()) m.cols_[s] = std::move(img);
  }
  return m;
}

SparseVec EquivariantMap::apply(long src_index) const {
  auto it = cols_.find(src_index);
  return it == cols_.end() ? SparseVec{} : it->second;
}

SparseVec EquivariantMap::apply(const SparseVec& v) const {
  SparseVec out;
  for (const auto& [k, c] : v) {
    auto it = cols_.find(k);
    if (it != cols_.end()) out = axpy(out, c, it->second);
  }
  return out;
}

EquivariantMap EquivariantMap::compose_after(const EquivariantMap& first) const {
  if (!(first.dst_ == src_)) throw std::invalid_argument("composition shape mismatch");
  EquivariantMap m(first.src_, dst_);
  for (const auto& [s, img] : first.cols_) {
    SparseVec v = apply(img);
    if (!v.empty()) m.cols_[s] = std::move(v);
  }
  return m;
}

EquivariantMap EquivariantMap::operator+(const EquivariantMap& o) const {
  if (!(src_ == o.src_) || !(dst_ == o.dst_))
    throw std::invalid_argument("sum shape mismatch");
  EquivariantMap m(src_, dst_);
  m.cols_ = cols_;
  for (const auto& [s, img] : o.cols_) {
    SparseVec v = axpy(m.apply(s), Rat(1), img);
    if (v.empty())
      m.cols_.erase(s);
    else
      m.cols_[s] = std::move(v);
  }
  return m;
}

EquivariantMap EquivariantMap::operator*(const Rat& c) const {
  EquivariantMap m(src_, dst_);
  if (c == 0) return m;
  for (const auto& [s, img] : cols_) m.cols_[s] = scale(img, c);
  return m;
}

bool EquivariantMap::is_zero() const {
  for (const auto& [s, img] : cols_)
    if (!img.empty()) return false;
  return true;
}

bool EquivariantMap::operator==(const EquivariantMap& o) const {
  if (!(src_ == o.src_) || !(dst_ == o.dst_)) return false;
  for (const auto& [s, img] : cols_) {
    SparseVec d = axpy(img, Rat(-1), o.apply(s));
    if (!d.empty()) return false;
  }
  for (const auto& [s, img] : o.cols_)
    if (!cols_.count(s) && !img.empty()) return false;
  return true;
}

long EquivariantMap::rank() const {
  RowSpace rs;
  long r = 0;
  for (const auto& [s, img] : cols_)
    if (rs.insert(img)) ++r;
  return r;
}

SparseVec EquivariantMap::functional_vector() const {
  SparseVec out;
  long dd = dst_.dim();
  for (const auto& [s, img] : cols_)
    for (const auto& [t, c] : img) out.emplace_back(s * dd + t, c);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool EquivariantMap::commutes_with_generators() const {
  for (const VMatrix& X : chevalley_generators(src_.context())) {
    EquivariantMap xs = lie_action(X, src_);
    EquivariantMap xd = lie_action(X, dst_);
    if (!(compose_after(xs) == xd.compose_after(*this))) return false;
  }
  return true;
}

}  // namespace tensalg
