#include "tensalg/group_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace tensalg {

bool GroupShape::contains(const Permutation& g) const {
  if (g.degree() != degree()) return false;
  if (is_product() && !g.stabilizes_block(1, p)) return false;
  return true;
}

std::string GroupShape::str() const {
  if (!is_product()) return "S" + std::to_string(p);
  return "S" + std::to_string(p) + "xS" + std::to_string(q);
}

namespace {

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> imgs(n);
  for (int i = 0; i < n; ++i) imgs[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(imgs));
  } while (std::next_permutation(imgs.begin(), imgs.end()));
  return out;
}

std::mutex enum_mutex;
std::map<GroupShape, std::vector<Permutation>> enum_cache;
std::map<GroupShape, std::map<Permutation, int>> index_cache;

}  // namespace

const std::vector<Permutation>& enumerate_group(const GroupShape& shape) {
  std::lock_guard<std::mutex> lock(enum_mutex);
  auto it = enum_cache.find(shape);
  if (it != enum_cache.end()) return it->second;
  std::vector<Permutation> elems;
  if (!shape.is_product()) {
    elems = all_permutations(shape.p);
  } else {
    for (const Permutation& s : all_permutations(shape.p))
      for (const Permutation& t : all_permutations(shape.q))
        elems.push_back(product_element(shape, s, t));
    std::sort(elems.begin(), elems.end());
  }
  auto& slot = enum_cache[shape];
  slot = std::move(elems);
  auto& idx = index_cache[shape];
  for (size_t i = 0; i < slot.size(); ++i) idx[slot[i]] = static_cast<int>(i);
  return slot;
}

int group_index(const GroupShape& shape, const Permutation& g) {
  enumerate_group(shape);
  std::lock_guard<std::mutex> lock(enum_mutex);
  auto& idx = index_cache[shape];
  auto it = idx.find(g);
  if (it == idx.end()) throw std::invalid_argument("element not in group " + shape.str());
  return it->second;
}

GroupAlgebraElement GroupAlgebraElement::unit(GroupShape shape) {
  return of(shape, Permutation::identity(shape.degree()));
}

GroupAlgebraElement GroupAlgebraElement::of(GroupShape shape, const Permutation& g, Rat c) {
  if (!shape.contains(g)) throw std::invalid_argument("element not in group " + shape.str());
  GroupAlgebraElement x(shape);
  x.add(g, c);
  return x;
}

Rat GroupAlgebraElement::coeff(const Permutation& g) const {
  auto it = coeff_.find(g);
  return it == coeff_.end() ? Rat(0) : it->second;
}

void GroupAlgebraElement::add(const Permutation& g, const Rat& c) {
  auto it = coeff_.find(g);
  if (it == coeff_.end()) {
    if (c != 0) coeff_.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeff_.erase(it);
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("mismatched ambient groups");
  GroupAlgebraElement r = *this;
  for (const auto& [g, c] : o.coeff_) r.add(g, c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("mismatched ambient groups");
  GroupAlgebraElement r = *this;
  for (const auto& [g, c] : o.coeff_) r.add(g, -c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
  if (shape_ != o.shape_) throw std::invalid_argument("mismatched ambient groups");
  GroupAlgebraElement r(shape_);
  for (const auto& [g, c] : coeff_)
    for (const auto& [h, d] : o.coeff_) r.add(g.after(h), c * d);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rat& c) const {
  GroupAlgebraElement r(shape_);
  if (c == 0) return r;
  for (const auto& [g, d] : coeff_) r.coeff_.emplace(g, c * d);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::involution() const {
  GroupAlgebraElement r(shape_);
  for (const auto& [g, c] : coeff_) r.add(g.inverse(), c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::sign_twist() const {
  GroupAlgebraElement r(shape_);
  for (const auto& [g, c] : coeff_) {
    int s = shape_.is_product() ? g.block_sign(shape_.p + 1, shape_.p + shape_.q) : g.sign();
    r.add(g, c * s);
  }
  return r;
}

Rat GroupAlgebraElement::trace_pair(const GroupAlgebraElement& y) const {
  if (shape_ != y.shape_) throw std::invalid_argument("mismatched ambient groups");
  Rat s = 0;
  for (const auto& [g, c] : coeff_) {
    auto it = y.coeff_.find(g);
    if (it != y.coeff_.end()) s += c * it->second;
  }
  return s;
}

std::string GroupAlgebraElement::str() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : coeff_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rat_str(c) << "*";
    os << g.cycle_string();
  }
  return os.str();
}

Permutation transposition_l(const GroupShape& shape, int a, int b) {
  if (a < 1 || b < 1 || a > shape.p || b > shape.p)
    throw std::invalid_argument("left transposition out of range");
  return Permutation::transposition(shape.degree(), a, b);
}

Permutation transposition_r(const GroupShape& shape, int a, int b) {
  if (!shape.is_product() || a < 1 || b < 1 || a > shape.q || b > shape.q)
    throw std::invalid_argument("right transposition out of range");
  return Permutation::transposition(shape.degree(), shape.p + a, shape.p + b);
}

Permutation product_element(const GroupShape& shape, const Permutation& s, const Permutation& t) {
  if (!shape.is_product() || s.degree() != shape.p || t.degree() != shape.q)
    throw std::invalid_argument("bad product element factors");
  std::vector<int> imgs(shape.degree());
  for (int i = 1; i <= shape.p; ++i) imgs[i - 1] = s.apply(i);
  for (int i = 1; i <= shape.q; ++i) imgs[shape.p + i - 1] = shape.p + t.apply(i);
  return Permutation::from_images(imgs);
}

BiPartition shape_cycle_type(const GroupShape& shape, const Permutation& g) {
  if (!shape.contains(g)) throw std::invalid_argument("element not in group " + shape.str());
  if (!shape.is_product()) return {g.cycle_type(), Partition()};
  std::vector<int> left, right;
  for (int i = 1; i <= shape.p; ++i) left.push_back(g.apply(i));
  for (int i = 1; i <= shape.q; ++i) right.push_back(g.apply(shape.p + i) - shape.p);
  return {Permutation::from_images(left).cycle_type(),
          Permutation::from_images(right).cycle_type()};
}

}  // namespace tensalg
