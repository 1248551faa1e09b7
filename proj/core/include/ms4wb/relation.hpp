//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_RELATION_HPP_
#define MS4WB_RELATION_HPP_

#include <array>
#include <optional>
#include <vector>

#include "ms4wb/point_set.hpp"

namespace ms4wb {

/// Binary relation on the points {0, ..., n-1}, kept as successor rows and
/// predecessor columns so that both images and preimages are cheap.
///
/// Composition convention: `a.then(b)` relates x to z iff x a y and y b z for
/// some y, i.e. `a.then(b).image(x) == b.image(a.image(x))`. Written in the
/// juxtaposition style used for frames, ER is `R.then(E)`.
class Relation {
 public:
  Relation() = default;
  explicit Relation(unsigned n);

  static Relation identity(unsigned n);
  static Relation total(unsigned n);

  unsigned size() const { return n_; }

  bool contains(unsigned x, unsigned y) const { return rows_[x].contains(y); }
  void insert(unsigned x, unsigned y);

  const PointSet &image(unsigned x) const { return rows_[x]; }
  const PointSet &preimage(unsigned y) const { return cols_[y]; }
  PointSet image(const PointSet &s) const;
  PointSet preimage(const PointSet &s) const;

  Relation then(const Relation &next) const;
  Relation transpose() const;
  Relation operator|(const Relation &other) const;
  Relation reflexive_transitive_closure() const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool subset_of(const Relation &other) const;
  bool is_total() const;

  // First (x, y, z) with x R y, y R z and not x R z.
  std::optional<std::array<unsigned, 3>> transitivity_witness() const;

  friend bool operator==(const Relation &a, const Relation &b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  unsigned n_ = 0;
  std::vector<PointSet> rows_;
  std::vector<PointSet> cols_;
};

}  // namespace ms4wb

#endif  // MS4WB_RELATION_HPP_
