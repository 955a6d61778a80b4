#pragma once

#include <map>
#include <string>
#include <vector>

#include "tensalg/permutation.hpp"
#include "tensalg/rational.hpp"

namespace tensalg {

/*
 * Exact arithmetic in C[S_p] and C[S_p x S_q].  Product-group elements are
 * permutations of degree p+q stabilizing the blocks {1..p} and {p+1..p+q};
 * the left factor acts on the first block ("_l"), the right factor on the
 * second ("_r").
 */
struct GroupShape {
  int p = 0;
  int q = -1;  // -1: plain S_p; >= 0: S_p x S_q

  bool is_product() const { return q >= 0; }
  int degree() const { return p + (q > 0 ? q : 0); }
  Int order() const { return factorial(p) * (is_product() ? factorial(q) : 1); }
  bool contains(const Permutation& g) const;

  auto operator<=>(const GroupShape&) const = default;
  std::string str() const;
};

// Fixed enumeration of the group elements (memoized per shape).
const std::vector<Permutation>& enumerate_group(const GroupShape& shape);
// Index of an element within enumerate_group(shape).
int group_index(const GroupShape& shape, const Permutation& g);

class GroupAlgebraElement {
 public:
  GroupAlgebraElement() = default;
  explicit GroupAlgebraElement(GroupShape shape) : shape_(shape) {}
  static GroupAlgebraElement unit(GroupShape shape);
  static GroupAlgebraElement of(GroupShape shape, const Permutation& g, Rat c = 1);

  const GroupShape& shape() const { return shape_; }
  const std::map<Permutation, Rat>& coeffs() const { return coeff_; }
  bool is_zero() const { return coeff_.empty(); }
  Rat coeff(const Permutation& g) const;

  void add(const Permutation& g, const Rat& c);  // drops zero coefficients

  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
  GroupAlgebraElement operator*(const Rat& c) const;
  bool operator==(const GroupAlgebraElement& o) const {
    return shape_ == o.shape_ && coeff_ == o.coeff_;
  }

  // g -> g^{-1}, extended linearly (an anti-automorphism)
  GroupAlgebraElement involution() const;
  // sigma: on S_p, s -> sgn(s) s; on S_p x S_q, (s,t) -> sgn(t) (s,t)
  GroupAlgebraElement sign_twist() const;
  // coefficient of the identity in x * involution(y); equals the coefficient
  // dot product, the symmetrizing trace form
  Rat trace_pair(const GroupAlgebraElement& y) const;

  std::string str() const;

 private:
  GroupShape shape_;
  std::map<Permutation, Rat> coeff_;
};

// transpositions in the two factors, as elements of the ambient group
Permutation transposition_l(const GroupShape& shape, int a, int b);
Permutation transposition_r(const GroupShape& shape, int a, int b);
// embed (s, t) in S_p x S_q
Permutation product_element(const GroupShape& shape, const Permutation& s, const Permutation& t);
// cycle type of g within the shape: (type_l, type_r); plain shapes get an
// empty right component
BiPartition shape_cycle_type(const GroupShape& shape, const Permutation& g);

}  // namespace tensalg
