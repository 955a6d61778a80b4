#include "tensalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace tensalg {

SparseVec axpy(const SparseVec& x, const Rat& c, const SparseVec& y) {
  SparseVec out;
  out.reserve(x.size() + y.size());
  size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      Rat v = c * y[j].second;
      if (v != 0) out.emplace_back(y[j].first, v);
      ++j;
    } else {
      Rat v = x[i].second + c * y[j].second;
      if (v != 0) out.emplace_back(x[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVec scale(const SparseVec& x, const Rat& c) {
  SparseVec out;
  if (c == 0) return out;
  out.reserve(x.size());
  for (const auto& [k, v] : x) out.emplace_back(k, c * v);
  return out;
}

void normalize_lead(SparseVec& v) {
  if (v.empty()) return;
  Rat lead = v.front().second;
  for (auto& [k, c] : v) c /= lead;
}

SparseVec RowSpace::reduce(SparseVec v) const {
  while (!v.empty()) {
    // find the smallest entry whose key is a pivot
    bool hit = false;
    for (const auto& [key, coef] : v) {
      auto it = rows_.find(key);
      if (it != rows_.end()) {
        v = axpy(v, -coef, it->second);
        hit = true;
        break;
      }
    }
    if (!hit) break;
  }
  return v;
}

bool RowSpace::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  normalize_lead(v);
  long pivot = v.front().first;
  // keep RREF: eliminate the new pivot from existing rows
  for (auto& [pk, row] : rows_) {
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(pivot, Rat(0)),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != row.end() && it->first == pivot) {
      Rat c = it->second;
      row = axpy(row, -c, v);
    }
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVec> RowSpace::basis() const {
  std::vector<SparseVec> out;
  out.reserve(rows_.size());
  for (const auto& [k, row] : rows_) out.push_back(row);
  return out;
}

bool RowSpace::contains_space(const RowSpace& other) const {
  for (const auto& [k, row] : other.rows_)
    if (!contains(row)) return false;
  return true;
}

bool RowSpace::equals(const RowSpace& other) const {
  return rank() == other.rank() && contains_space(other);
}

std::vector<Rat> RowSpace::coordinates(const SparseVec& v) const {
  std::vector<Rat> coords;
  coords.reserve(rows_.size());
  SparseVec rest = v;
  for (const auto& [pivot, row] : rows_) {
    auto it = std::lower_bound(rest.begin(), rest.end(), std::make_pair(pivot, Rat(0)),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != rest.end() && it->first == pivot) {
      Rat c = it->second;
      coords.push_back(c);
      rest = axpy(rest, -c, row);
    } else {
      coords.push_back(0);
    }
  }
  if (!rest.empty()) throw std::invalid_argument("vector outside the span");
  return coords;
}

std::vector<SparseVec> kernel_basis(const std::vector<long>& domain_keys,
                                    const std::vector<SparseVec>& functionals) {
  RowSpace rs;
  for (const auto& f : functionals) rs.insert(f);
  std::vector<SparseVec> out;
  for (long key : domain_keys) {
    if (rs.rows().count(key)) continue;  // pivot column
    SparseVec v{{key, Rat(1)}};
    for (const auto& [pivot, row] : rs.rows()) {
      auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(key, Rat(0)),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
      if (it != row.end() && it->first == key) v = axpy(v, -it->second, SparseVec{{pivot, Rat(1)}});
    }
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SparseVec> intersect_spans(const std::vector<SparseVec>& a,
                                       const std::vector<SparseVec>& b) {
  // x = sum t_i a_i lies in span(b) iff residue_B(x) = 0; solve for t.
  RowSpace B;
  for (const auto& v : b) B.insert(v);
  // residues of the a_i; functionals over t-coordinates indexed by residual keys
  std::map<long, SparseVec> rows_by_key;
  std::vector<SparseVec> residues;
  residues.reserve(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    SparseVec r = B.reduce(a[i]);
    for (const auto& [k, c] : r) {
      auto& row = rows_by_key[k];
      row.emplace_back(static_cast<long>(i), c);
    }
    residues.push_back(std::move(r));
  }
  std::vector<SparseVec> functionals;
  functionals.reserve(rows_by_key.size());
  for (auto& [k, row] : rows_by_key) {
    std::sort(row.begin(), row.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    functionals.push_back(std::move(row));
  }
  std::vector<long> tkeys;
  for (size_t i = 0; i < a.size(); ++i) tkeys.push_back(static_cast<long>(i));
  std::vector<SparseVec> tkernel = kernel_basis(tkeys, functionals);
  RowSpace result;
  for (const auto& t : tkernel) {
    SparseVec x;
    for (const auto& [i, c] : t) x = axpy(x, c, a[i]);
    result.insert(x);
  }
  return result.basis();
}

}  // namespace tensalg
