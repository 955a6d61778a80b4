#include "tensalg/socle.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>
#include <thread>

namespace tensalg {

std::vector<EquivariantMap> single_contractions(const TensorSpace& space) {
  std::vector<EquivariantMap> out;
  if (space.context().g == GType::sl) {
    for (int i = 1; i <= space.p(); ++i)
      for (int j = 1; j <= space.q(); ++j)
        out.push_back(EquivariantMap::contraction_phi(i, j, space));
  } else {
    for (int i = 1; i <= space.p(); ++i)
      for (int j = i + 1; j <= space.p(); ++j)
        out.push_back(EquivariantMap::contraction_psi(i, j, space));
  }
  return out;
}

namespace {

std::mutex filt_mutex;
std::map<std::tuple<GType, int, int, int>, std::unique_ptr<SpaceFiltration>> filt_cache;

// parallel apply over items with deterministic collection
template <typename Item, typename F>
void parallel_for(const std::vector<Item>& items, F&& f) {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  if (items.size() < 2 || threads < 2) {
    for (size_t i = 0; i < items.size(); ++i) f(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= items.size()) break;
        f(i);
      }
    });
  for (auto& th : pool) th.join();
}

}  // namespace

SpaceFiltration::SpaceFiltration(const TensorSpace& space) {
  std::vector<EquivariantMap> cons = single_contractions(space);
  const auto& wb = space.weight_blocks();
  if (cons.empty()) {
    // single layer: the whole space
    for (const auto& [w, idxs] : wb) {
      RowSpace rs;
      for (long i : idxs) rs.insert(SparseVec{{i, Rat(1)}});
      blocks_[w].push_back(std::move(rs));
    }
    depth_ = 1;
    return;
  }
  const TensorSpace& target = cons.front().dst();
  const SpaceFiltration& sub = SpaceFiltration::get(target);

  std::vector<const std::pair<const WeightVec, std::vector<long>>*> items;
  for (const auto& kv : wb) items.push_back(&kv);
  std::vector<std::vector<RowSpace>> results(items.size());

  parallel_for(items, [&](size_t slot) {
    const auto& [w, idxs] = *items[slot];
    std::vector<RowSpace>& filt = results[slot];
    for (int k = 0;; ++k) {
      // F^k = { v in block : residue of c(v) against F^{k-1}(target) = 0 }
      std::map<long, SparseVec> rows_by_key;  // functional rows over domain keys
      for (size_t ci = 0; ci < cons.size(); ++ci) {
        const RowSpace* prev = (k == 0) ? nullptr : sub.block(k - 1, w);
        for (long s : idxs) {
          SparseVec img = cons[ci].apply(s);
          if (k > 0 && prev) img = prev->reduce(std::move(img));
          for (const auto& [tk, c] : img)
            rows_by_key[static_cast<long>(ci) * target.dim() + tk].emplace_back(s, c);
        }
      }
      std::vector<SparseVec> functionals;
      functionals.reserve(rows_by_key.size());
      for (auto& [key, row] : rows_by_key) functionals.push_back(std::move(row));
      RowSpace rs;
      for (auto& v : kernel_basis(idxs, functionals)) rs.insert(std::move(v));
      bool full = rs.rank() == static_cast<int>(idxs.size());
      filt.push_back(std::move(rs));
      if (full) break;
    }
  });

  depth_ = 1 + sub.depth_;  // F^{depth-1} always reaches the whole space
  for (size_t i = 0; i < items.size(); ++i) {
    auto& filt = results[i];
    while (filt.size() < depth_) filt.push_back(filt.back());
    blocks_[items[i]->first] = std::move(filt);
  }
}

const SpaceFiltration& SpaceFiltration::get(const TensorSpace& space) {
  std::tuple<GType, int, int, int> key{space.context().g, space.context().n, space.p(),
                                       space.q()};
  {
    std::lock_guard<std::mutex> lock(filt_mutex);
    auto it = filt_cache.find(key);
    if (it != filt_cache.end()) return *it->second;
  }
  auto built = std::unique_ptr<SpaceFiltration>(new SpaceFiltration(space));
  std::lock_guard<std::mutex> lock(filt_mutex);
  auto [it, inserted] = filt_cache.emplace(key, std::move(built));
  return *it->second;
}

const RowSpace* SpaceFiltration::block(int k, const WeightVec& w) const {
  auto it = blocks_.find(w);
  if (it == blocks_.end()) return nullptr;
  if (k < 0) return nullptr;
  if (k >= static_cast<int>(it->second.size())) k = static_cast<int>(it->second.size()) - 1;
  return &it->second[k];
}

SubmoduleBlocks submodule_from_spanning(const TensorSpace& space,
                                        const std::vector<SparseVec>& spanning) {
  SubmoduleBlocks out;
  for (const auto& v : spanning) {
    if (v.empty()) continue;
    WeightVec w = space.weight_of(v.front().first);
    out[w].insert(v);
  }
  return out;
}

SubmoduleBlocks projector_image(const GroupAlgebraElement& y, const TensorSpace& space) {
  int p = space.p(), q = space.q();
  const GroupShape& shape = y.shape();
  if (shape.p != p || (shape.is_product() ? shape.q : 0) != q)
    throw std::invalid_argument("projector shape does not match the space");
  const auto& wb = space.weight_blocks();
  std::vector<const std::pair<const WeightVec, std::vector<long>>*> items;
  for (const auto& kv : wb) items.push_back(&kv);
  std::vector<RowSpace> results(items.size());
  parallel_for(items, [&](size_t slot) {
    const auto& [w, idxs] = *items[slot];
    RowSpace rs;
    for (long s : idxs) {
      std::vector<int> t = space.tuple_of(s);
      SparseVec img;
      for (const auto& [g, c] : y.coeffs()) {
        std::vector<int> out(p + q);
        for (int k = 1; k <= p + q; ++k) out[g.apply(k) - 1] = t[k - 1];
        img = axpy(img, c, SparseVec{{space.index_of(out), Rat(1)}});
      }
      rs.insert(std::move(img));
    }
    results[slot] = std::move(rs);
  });
  SubmoduleBlocks out;
  for (size_t i = 0; i < items.size(); ++i)
    if (results[i].rank() > 0) out[items[i]->first] = std::move(results[i]);
  return out;
}

SubmoduleFiltration filter_submodule(const TensorSpace& space, const SubmoduleBlocks& w) {
  SubmoduleFiltration out{space, {}, 0};
  std::vector<EquivariantMap> cons = single_contractions(space);
  if (cons.empty()) {
    for (const auto& [wt, rs] : w) out.blocks[wt] = {rs};
    out.layers = 1;
    return out;
  }
  const TensorSpace& target = cons.front().dst();
  const SpaceFiltration& sub = SpaceFiltration::get(target);

  std::vector<const std::pair<const WeightVec, RowSpace>*> items;
  for (const auto& kv : w) items.push_back(&kv);
  std::vector<std::vector<RowSpace>> results(items.size());

  parallel_for(items, [&](size_t slot) {
    const auto& [wt, wrs] = *items[slot];
    std::vector<SparseVec> basis = wrs.basis();
    std::vector<RowSpace>& filt = results[slot];
    for (int k = 0;; ++k) {
      // v = sum t_i u_i with residue of c(v) against F^{k-1}(target) = 0
      std::map<long, SparseVec> rows_by_key;
      for (size_t ci = 0; ci < cons.size(); ++ci) {
        const RowSpace* prev = (k == 0) ? nullptr : sub.block(k - 1, wt);
        for (size_t bi = 0; bi < basis.size(); ++bi) {
          SparseVec img = cons[ci].apply(basis[bi]);
          if (k > 0 && prev) img = prev->reduce(std::move(img));
          for (const auto& [tk, c] : img)
            rows_by_key[static_cast<long>(ci) * target.dim() + tk].emplace_back(
                static_cast<long>(bi), c);
        }
      }
      std::vector<SparseVec> functionals;
      for (auto& [key, row] : rows_by_key) functionals.push_back(std::move(row));
      std::vector<long> tkeys;
      for (size_t bi = 0; bi < basis.size(); ++bi) tkeys.push_back(static_cast<long>(bi));
      RowSpace rs;
      for (const auto& t : kernel_basis(tkeys, functionals)) {
        SparseVec v;
        for (const auto& [i, c] : t) v = axpy(v, c, basis[i]);
        rs.insert(std::move(v));
      }
      bool full = rs.rank() == static_cast<int>(basis.size());
      filt.push_back(std::move(rs));
      if (full) break;
    }
  });

  size_t depth = 0;
  for (const auto& filt : results) depth = std::max(depth, filt.size());
  for (size_t i = 0; i < items.size(); ++i) {
    auto filt = std::move(results[i]);
    while (filt.size() < depth) filt.push_back(filt.back());
    out.blocks[items[i]->first] = std::move(filt);
  }
  out.layers = static_cast<int>(depth);
  return out;
}

WeightDecomposition SubmoduleFiltration::layer_weights(int k) const {
  WeightDecomposition out;
  for (const auto& [wt, filt] : blocks) {
    int cur = filt[std::min<size_t>(k, filt.size() - 1)].rank();
    int prev = (k == 0) ? 0 : filt[std::min<size_t>(k - 1, filt.size() - 1)].rank();
    if (cur - prev > 0) out[wt] = cur - prev;
  }
  return out;
}

long SubmoduleFiltration::total_dim() const {
  long d = 0;
  for (const auto& [wt, filt] : blocks) d += filt.back().rank();
  return d;
}

SubmoduleBlocks SubmoduleFiltration::layer_zero() const {
  SubmoduleBlocks out;
  for (const auto& [wt, filt] : blocks)
    if (filt.front().rank() > 0) out[wt] = filt.front();
  return out;
}

SubmoduleBlocks tensor_with_v(const TensorSpace& small, const SubmoduleBlocks& w) {
  TensorSpace big(small.context(), small.p() + 1, small.q());
  long shift = small.dim();
  SubmoduleBlocks out;
  for (int i = 1; i <= small.context().dimV(); ++i) {
    WeightVec wi = small.context().weight_of_e(i);
    for (const auto& [wt, rs] : w) {
      WeightVec nw = wt;
      for (size_t k = 0; k < nw.size(); ++k) nw[k] += wi[k];
      for (const auto& b : rs.basis()) {
        SparseVec v;
        v.reserve(b.size());
        for (const auto& [key, c] : b) v.emplace_back((i - 1) * shift + key, c);
        out[nw].insert(std::move(v));
      }
    }
  }
  return out;
}

long submodule_dim(const SubmoduleBlocks& w) {
  long d = 0;
  for (const auto& [wt, rs] : w) d += rs.rank();
  return d;
}

}  // namespace tensalg
