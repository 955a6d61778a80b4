#include "tensalg/right_ideal.hpp"

#include <stdexcept>

#include "tensalg/characters.hpp"

namespace tensalg {

GroupAlgebraElement RightIdeal::from_coords(const SparseVec& v) const {
  const auto& elems = enumerate_group(shape_);
  GroupAlgebraElement x(shape_);
  for (const auto& [k, c] : v) x.add(elems[k], c);
  return x;
}

SparseVec RightIdeal::to_coords(const GroupAlgebraElement& x) const {
  if (x.shape() != shape_) throw std::invalid_argument("mismatched ambient groups");
  SparseVec v;
  for (const auto& [g, c] : x.coeffs()) v.emplace_back(group_index(shape_, g), c);
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

RightIdeal RightIdeal::span_of(GroupShape shape, const std::vector<GroupAlgebraElement>& gens) {
  RightIdeal ideal(shape);
  for (const auto& g : gens) ideal.rows_.insert(ideal.to_coords(g));
  return ideal;
}

RightIdeal RightIdeal::generated_by(GroupShape shape,
                                    const std::vector<GroupAlgebraElement>& gens) {
  RightIdeal ideal(shape);
  const auto& elems = enumerate_group(shape);
  for (const auto& x : gens)
    for (const auto& g : elems)
      ideal.rows_.insert(ideal.to_coords(x * GroupAlgebraElement::of(shape, g)));
  return ideal;
}

RightIdeal RightIdeal::full(GroupShape shape) {
  RightIdeal ideal(shape);
  for (const auto& g : enumerate_group(shape))
    ideal.rows_.insert(SparseVec{{group_index(shape, g), Rat(1)}});
  return ideal;
}

bool RightIdeal::contains(const GroupAlgebraElement& x) const {
  return rows_.contains(to_coords(x));
}

bool RightIdeal::contains_ideal(const RightIdeal& other) const {
  if (shape_ != other.shape_) return false;
  return rows_.contains_space(other.rows_);
}

bool RightIdeal::equals(const RightIdeal& other) const {
  return shape_ == other.shape_ && rows_.equals(other.rows_);
}

bool RightIdeal::closed_under_right_action() const {
  // right multiplication by Coxeter generators spans the action
  std::vector<Permutation> gens;
  for (int i = 1; i < shape_.p; ++i) gens.push_back(transposition_l(shape_, i, i + 1));
  if (shape_.is_product())
    for (int i = 1; i < shape_.q; ++i) gens.push_back(transposition_r(shape_, i, i + 1));
  for (const auto& b : basis())
    for (const auto& t : gens)
      if (!contains(b * GroupAlgebraElement::of(shape_, t))) return false;
  return true;
}

std::vector<GroupAlgebraElement> RightIdeal::basis() const {
  std::vector<GroupAlgebraElement> out;
  for (const auto& row : rows_.basis()) out.push_back(from_coords(row));
  return out;
}

RightIdeal RightIdeal::sum(const RightIdeal& other) const {
  if (shape_ != other.shape_) throw std::invalid_argument("mismatched ambient groups");
  RightIdeal ideal(shape_);
  for (const auto& r : rows_.basis()) ideal.rows_.insert(r);
  for (const auto& r : other.rows_.basis()) ideal.rows_.insert(r);
  return ideal;
}

RightIdeal RightIdeal::intersect(const RightIdeal& other) const {
  if (shape_ != other.shape_) throw std::invalid_argument("mismatched ambient groups");
  RightIdeal ideal(shape_);
  for (auto& v : intersect_spans(rows_.basis(), other.rows_.basis())) ideal.rows_.insert(v);
  return ideal;
}

RightIdeal RightIdeal::map(
    const std::function<GroupAlgebraElement(const GroupAlgebraElement&)>& f) const {
  RightIdeal ideal(shape_);
  for (const auto& b : basis()) ideal.rows_.insert(ideal.to_coords(f(b)));
  return ideal;
}

std::map<BiPartition, long> RightIdeal::decompose_bi() const {
  if (!closed_under_right_action())
    throw std::invalid_argument("span is not closed under the right action");
  const auto& elems = enumerate_group(shape_);
  // character of right multiplication on the module
  std::map<BiPartition, Rat> traces;  // cycle type -> trace
  std::map<BiPartition, long> classcount;
  for (const auto& g : elems) {
    BiPartition ct = shape_cycle_type(shape_, g);
    classcount[ct]++;
    if (traces.count(ct)) continue;
    Rat tr = 0;
    GroupAlgebraElement ge = GroupAlgebraElement::of(shape_, g);
    int i = 0;
    for (const auto& b : basis()) {
      std::vector<Rat> coords = rows_.coordinates(to_coords(b * ge));
      tr += coords[i];
      ++i;
    }
    traces[ct] = tr;
  }
  std::map<BiPartition, long> out;
  Rat order(shape_.order());
  for (const Partition& l1 : partitions_of(shape_.p)) {
    for (const Partition& l2 : partitions_of(shape_.is_product() ? shape_.q : 0)) {
      BiPartition label(l1, l2);
      Rat m = 0;
      for (const auto& [ct, tr] : traces) m += Rat(classcount[ct]) * character_value(label, ct) * tr;
      m /= order;
      if (m.get_den() != 1) throw std::logic_error("non-integral multiplicity");
      long mi = static_cast<long>(m.get_num().get_si());
      if (mi < 0) throw std::logic_error("negative multiplicity");
      if (mi) out[label] = mi;
    }
  }
  return out;
}

std::map<Partition, long> RightIdeal::decompose() const {
  if (shape_.is_product())
    throw std::invalid_argument("partition-labelled decomposition needs a plain S_p");
  std::map<Partition, long> out;
  for (const auto& [bl, m] : decompose_bi()) out[bl.first()] = m;
  return out;
}

GroupAlgebraElement central_idempotent(const GroupShape& shape, const BiPartition& label) {
  GroupAlgebraElement z(shape);
  Rat d(symmetric_group_dim(label.first()) * symmetric_group_dim(label.second()));
  Rat order(shape.order());
  for (const auto& g : enumerate_group(shape)) {
    BiPartition ct = shape_cycle_type(shape, g.inverse());
    z.add(g, d / order * character_value(label, ct));
  }
  return z;
}

RightIdeal RightIdeal::isotypic(const BiPartition& label) const {
  GroupAlgebraElement z = central_idempotent(shape_, label);
  RightIdeal ideal(shape_);
  for (const auto& b : basis()) ideal.rows_.insert(to_coords(z * b));
  return ideal;
}

RightIdeal RightIdeal::orthogonal_complement_in(const RightIdeal& ambient) const {
  if (shape_ != ambient.shape_) throw std::invalid_argument("mismatched ambient groups");
  // x = sum t_i a_i with <x, r_j> = 0 for every basis vector r_j of *this
  std::vector<SparseVec> abasis = ambient.rows_.basis();
  std::vector<SparseVec> functionals;
  for (const auto& r : rows_.basis()) {
    SparseVec row;
    for (size_t i = 0; i < abasis.size(); ++i) {
      // dot product of abasis[i] with r
      Rat dot = 0;
      size_t x = 0, y = 0;
      while (x < abasis[i].size() && y < r.size()) {
        if (abasis[i][x].first < r[y].first)
          ++x;
        else if (r[y].first < abasis[i][x].first)
          ++y;
        else {
          dot += abasis[i][x].second * r[y].second;
          ++x;
          ++y;
        }
      }
      if (dot != 0) row.emplace_back(static_cast<long>(i), dot);
    }
    functionals.push_back(std::move(row));
  }
  std::vector<long> tkeys;
  for (size_t i = 0; i < abasis.size(); ++i) tkeys.push_back(static_cast<long>(i));
  RightIdeal ideal(shape_);
  for (const auto& t : kernel_basis(tkeys, functionals)) {
    SparseVec x;
    for (const auto& [i, c] : t) x = axpy(x, c, abasis[i]);
    ideal.rows_.insert(x);
  }
  return ideal;
}

}  // namespace tensalg
