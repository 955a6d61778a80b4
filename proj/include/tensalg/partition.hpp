#pragma once

#include <compare>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tensalg/rational.hpp"

/*
 * Partition and bipartition combinatorics: conjugation, one-box up/down sets,
 * the two-box Pieri set for S^2(V), hook-length dimensions of symmetric group
 * irreducibles, and block labels.
 *
 * Partitions are stored canonically: weakly decreasing positive parts, no
 * trailing zeros; the empty partition is the unique size-0 value.
 */

namespace tensalg {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
      if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
        throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const {  // |mu|
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }
  int length() const { return static_cast<int>(parts_.size()); }  // #mu
  int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based, 0 beyond length
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  bool contains(const Partition& other) const;  // containment of Young diagrams

  std::string str() const;  // "[3,1]", "[]"

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

class BiPartition {
 public:
  BiPartition() = default;
  BiPartition(Partition first, Partition second)
      : first_(std::move(first)), second_(std::move(second)) {}

  static BiPartition parse(const std::string& text);  // "([3,1],[2])"

  const Partition& first() const { return first_; }
  const Partition& second() const { return second_; }
  int size() const { return first_.size() + second_.size(); }
  int length() const { return first_.length() + second_.length(); }

  // (lambda^1, (lambda^2)^perp); the perp used by the Ext/socle dictionary.
  BiPartition perp() const { return {first_, second_.conjugate()}; }

  std::string str() const;  // "([3,1],[2])"

  auto operator<=>(const BiPartition&) const = default;

 private:
  Partition first_, second_;
};

// All partitions of n (n >= 0), in a fixed deterministic order.
std::vector<Partition> partitions_of(int n);

// mu^+ / mu^-: all one-box additions / removals that are again partitions.
std::set<Partition> up_set(const Partition& mu);
std::set<Partition> down_set(const Partition& mu);

// lambda^+ (box added to lambda^1) and lambda^- (box removed from lambda^2).
std::set<BiPartition> bipartition_up(const BiPartition& lambda);
std::set<BiPartition> bipartition_down(const BiPartition& lambda);

// lambda^{++}: two boxes added, lambda'_i >= lambda_i, and if two distinct
// rows both grow then their original lengths differ.  (The Pieri set for
// tensoring with S^2(V).)
std::set<Partition> pieri_s2(const Partition& lambda);

// Dimension of the S_{|mu|}-irreducible of shape mu, by the hook length formula.
Int symmetric_group_dim(const Partition& mu);

enum class GType { sl, o, sp };

std::string gtype_str(GType g);
GType parse_gtype(const std::string& s);

struct BlockLabel {
  GType g;
  long value;  // sl: |l1|-|l2|; o/sp: |l| mod 2
  auto operator<=>(const BlockLabel&) const = default;
  std::string str() const;
};

BlockLabel block_label(GType g, const BiPartition& lambda);  // sl only
BlockLabel block_label(GType g, const Partition& lambda);    // o/sp only

}  // namespace tensalg
