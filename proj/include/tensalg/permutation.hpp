#pragma once

#include <compare>
#include <string>
#include <vector>

#include "tensalg/partition.hpp"

namespace tensalg {

/*
 * Permutations of {1..n}, acting on positions.  Composition is fixed once and
 * for all as "apply right factor first": (a.after(b))(x) = a(b(x)).
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int n) : img_(n) {
    for (int i = 0; i < n; ++i) img_[i] = i;
  }
  static Permutation identity(int n) { return Permutation(n); }
  static Permutation transposition(int n, int a, int b);  // a,b are 1-based letters
  static Permutation from_images(std::vector<int> one_based_images);
  // one-line "3 1 2" or cycle "(1 2)(3 4)" notation; degree required for cycles
  static Permutation parse(const std::string& text, int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int letter) const { return img_[letter - 1] + 1; }  // 1-based

  Permutation after(const Permutation& first) const;  // (*this) o first
  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  // cycle type as a partition of n
  Partition cycle_type() const;
  std::string cycle_string() const;  // "(1 2)(3 4)"; identity prints "()"

  // sign of the permutation induced on the letter block [lo..hi] (1-based,
  // inclusive); the block must be stabilized
  int block_sign(int lo, int hi) const;
  bool stabilizes_block(int lo, int hi) const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> img_;  // 0-based images
};

}  // namespace tensalg
