//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ms4wb/relation.hpp"

namespace ms4wb {

Relation::Relation(unsigned n)
    : n_(n), rows_(n, PointSet(n)), cols_(n, PointSet(n)) {}

Relation Relation::identity(unsigned n) {
  Relation r(n);
  for (unsigned x = 0; x < n; ++x) r.insert(x, x);
  return r;
}

Relation Relation::total(unsigned n) {
  Relation r(n);
  for (unsigned x = 0; x < n; ++x) {
    r.rows_[x] = PointSet::full(n);
    r.cols_[x] = PointSet::full(n);
  }
  return r;
}

void Relation::insert(unsigned x, unsigned y) {
  rows_[x].insert(y);
  cols_[y].insert(x);
}

PointSet Relation::image(const PointSet &s) const {
  PointSet out(n_);
  s.for_each([&](unsigned x) { out |= rows_[x]; });
  return out;
}

PointSet Relation::preimage(const PointSet &s) const {
  PointSet out(n_);
  s.for_each([&](unsigned y) { out |= cols_[y]; });
  return out;
}

Relation Relation::then(const Relation &next) const {
  Relation out(n_);
  for (unsigned x = 0; x < n_; ++x)
    next.image(rows_[x]).for_each([&](unsigned z) { out.insert(x, z); });
  return out;
}

Relation Relation::transpose() const {
  Relation out(n_);
  out.rows_ = cols_;
  out.cols_ = rows_;
  return out;
}

Relation Relation::operator|(const Relation &other) const {
  Relation out = *this;
  for (unsigned x = 0; x < n_; ++x) {
    out.rows_[x] |= other.rows_[x];
    out.cols_[x] |= other.cols_[x];
  }
  return out;
}

Relation Relation::reflexive_transitive_closure() const {
  // Warshall on bit rows.
  std::vector<PointSet> rows = rows_;
  for (unsigned x = 0; x < n_; ++x) rows[x].insert(x);
  for (unsigned k = 0; k < n_; ++k)
    for (unsigned x = 0; x < n_; ++x)
      if (rows[x].contains(k)) rows[x] |= rows[k];
  Relation out(n_);
  for (unsigned x = 0; x < n_; ++x)
    rows[x].for_each([&](unsigned y) { out.insert(x, y); });
  return out;
}

bool Relation::is_reflexive() const {
  for (unsigned x = 0; x < n_; ++x)
    if (!rows_[x].contains(x)) return false;
  return true;
}

bool Relation::is_symmetric() const { return rows_ == cols_; }

bool Relation::is_transitive() const { return !transitivity_witness(); }

std::optional<std::array<unsigned, 3>> Relation::transitivity_witness() const {
  for (unsigned x = 0; x < n_; ++x) {
    std::optional<std::array<unsigned, 3>> found;
    rows_[x].for_each([&](unsigned y) {
      if (found) return;
      PointSet missing = rows_[y] - rows_[x];
      if (auto z = missing.first()) found = std::array<unsigned, 3>{x, y, *z};
    });
    if (found) return found;
  }
  return std::nullopt;
}

bool Relation::subset_of(const Relation &other) const {
  for (unsigned x = 0; x < n_; ++x)
    if (!rows_[x].subset_of(other.rows_[x])) return false;
  return true;
}

bool Relation::is_total() const {
  for (unsigned x = 0; x < n_; ++x)
    if (!rows_[x].is_full()) return false;
  return true;
}

}  // namespace ms4wb
