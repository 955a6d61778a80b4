#pragma once

#include <functional>
#include <map>
#include <vector>

#include "tensalg/rational.hpp"

namespace tensalg {

/*
 * Exact sparse linear algebra over Q.  Vectors are sorted (key, value) lists
 * with arbitrary long keys, so weight blocks and operator-coefficient spaces
 * can use their natural global indexing.  RowSpace keeps a reduced echelon
 * basis; all the kernel/intersection machinery is built on it.
 */
using SparseVec = std::vector<std::pair<long, Rat>>;  // sorted by key, no zeros

SparseVec axpy(const SparseVec& x, const Rat& c, const SparseVec& y);  // x + c*y
SparseVec scale(const SparseVec& x, const Rat& c);
void normalize_lead(SparseVec& v);  // divide by leading coefficient

class RowSpace {
 public:
  RowSpace() = default;

  // Reduce v against the stored rows; result has no pivot keys.
  SparseVec reduce(SparseVec v) const;
  // Insert a vector; returns true if it enlarged the span.
  bool insert(SparseVec v);
  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<long, SparseVec>& rows() const { return rows_; }  // pivot -> row

  std::vector<SparseVec> basis() const;
  bool contains_space(const RowSpace& other) const;
  bool equals(const RowSpace& other) const;

  // Coordinates of v in terms of basis() (which is RREF: coordinate i is the
  // coefficient at the i-th pivot).  Throws if v is outside the span.
  std::vector<Rat> coordinates(const SparseVec& v) const;

 private:
  std::map<long, SparseVec> rows_;  // pivot key -> row, RREF maintained
};

// Kernel of the linear map whose rows (functionals on the domain) are given.
// domain_keys lists the coordinates of the domain in a fixed order; the
// returned vectors are expressed in those coordinates.
std::vector<SparseVec> kernel_basis(const std::vector<long>& domain_keys,
                                    const std::vector<SparseVec>& functionals);

// Intersection of two subspaces given by spanning sets (same key universe).
std::vector<SparseVec> intersect_spans(const std::vector<SparseVec>& a,
                                       const std::vector<SparseVec>& b);

}  // namespace tensalg
