//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_PARTITION_HPP_
#define MS4WB_PARTITION_HPP_

#include <compare>
#include <span>
#include <vector>

#include "ms4wb/point_set.hpp"
#include "ms4wb/relation.hpp"

namespace ms4wb {

/// A set partition of {0, ..., n-1} in canonical form: blocks sorted by their
/// least member, so two partitions are equal iff they are structurally equal.
class Partition {
 public:
  Partition() = default;

  static Partition identity(unsigned n);
  static Partition single_block(unsigned n);
  // Throws InputError unless the blocks are nonempty, disjoint and cover all
  // points.
  static Partition from_blocks(unsigned n, std::span<const PointSet> blocks);
  // Point i goes to block labels[i]; labels are arbitrary integers.
  static Partition from_labels(std::span<const unsigned> labels);
  // Finest partition whose blocks contain each of the given (possibly
  // overlapping) sets.
  static Partition finest_containing(unsigned n, std::span<const PointSet> sets);
  // Throws InputError if the relation is not an equivalence.
  static Partition from_equivalence(const Relation &eq);
  // Points identified by every given set (x ~ y iff no set separates them).
  static Partition kernel(unsigned n, std::span<const PointSet> sets);

  unsigned size() const { return n_; }
  unsigned block_count() const { return static_cast<unsigned>(blocks_.size()); }
  const std::vector<PointSet> &blocks() const { return blocks_; }
  unsigned block_index(unsigned point) const { return block_of_[point]; }
  const PointSet &block_of(unsigned point) const {
    return blocks_[block_of_[point]];
  }

  PointSet saturate(const PointSet &s) const;
  bool is_saturated(const PointSet &s) const { return saturate(s) == s; }

  bool is_identity() const { return blocks_.size() == n_; }
  bool is_single_block() const { return blocks_.size() == 1; }

  // Every block of *this lies inside a block of other (K is contained in L as
  // relations).
  bool finer_than(const Partition &other) const;
  Partition join(const Partition &other) const;
  Partition meet(const Partition &other) const;
  Relation as_relation() const;

  friend bool operator==(const Partition &a, const Partition &b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  explicit Partition(unsigned n, std::vector<PointSet> blocks);

  unsigned n_ = 0;
  std::vector<PointSet> blocks_;
  std::vector<unsigned> block_of_;
};

}  // namespace ms4wb

#endif  // MS4WB_PARTITION_HPP_
