//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ms4wb/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "ms4wb/error.hpp"

namespace ms4wb {

namespace {

// Union-find over at most 64 points.
class DisjointSets {
 public:
  explicit DisjointSets(unsigned n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0U);
  }
  unsigned find(unsigned x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(unsigned a, unsigned b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<unsigned> parent_;
};

std::vector<PointSet> blocks_from_sets(DisjointSets &ds, unsigned n) {
  std::vector<PointSet> blocks;
  std::vector<int> slot(n, -1);
  for (unsigned x = 0; x < n; ++x) {
    unsigned root = ds.find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(blocks.size());
      blocks.emplace_back(n);
    }
    blocks[static_cast<unsigned>(slot[root])].insert(x);
  }
  return blocks;
}

}  // namespace

Partition::Partition(unsigned n, std::vector<PointSet> blocks)
    : n_(n), blocks_(std::move(blocks)), block_of_(n) {
  std::sort(blocks_.begin(), blocks_.end(),
            [](const PointSet &a, const PointSet &b) {
              return *a.first() < *b.first();
            });
  for (unsigned i = 0; i < blocks_.size(); ++i)
    blocks_[i].for_each([&](unsigned x) { block_of_[x] = i; });
}

Partition Partition::identity(unsigned n) {
  std::vector<PointSet> blocks;
  for (unsigned x = 0; x < n; ++x) blocks.push_back(PointSet::singleton(n, x));
  return Partition(n, std::move(blocks));
}

Partition Partition::single_block(unsigned n) {
  if (n == 0) return Partition(0, {});
  return Partition(n, {PointSet::full(n)});
}

Partition Partition::from_blocks(unsigned n, std::span<const PointSet> blocks) {
  PointSet seen(n);
  for (const auto &b : blocks) {
    if (b.width() != n) throw InputError("partition block has wrong width");
    if (b.is_empty()) throw InputError("partition has an empty block");
    if (seen.intersects(b)) {
      throw InputError("partition blocks overlap at point " +
                       std::to_string(*(seen & b).first()));
    }
    seen |= b;
  }
  if (!seen.is_full()) {
    throw InputError("partition does not cover point " +
                     std::to_string(*seen.complement().first()));
  }
  return Partition(n, {blocks.begin(), blocks.end()});
}

Partition Partition::from_labels(std::span<const unsigned> labels) {
  const auto n = static_cast<unsigned>(labels.size());
  std::map<unsigned, PointSet> by_label;
  for (unsigned x = 0; x < n; ++x)
    by_label.try_emplace(labels[x], n).first->second.insert(x);
  std::vector<PointSet> blocks;
  for (auto &[label, block] : by_label) blocks.push_back(block);
  return Partition(n, std::move(blocks));
}

Partition Partition::finest_containing(unsigned n,
                                       std::span<const PointSet> sets) {
  DisjointSets ds(n);
  for (const auto &s : sets) {
    if (auto head = s.first())
      s.for_each([&](unsigned x) { ds.unite(*head, x); });
  }
  return Partition(n, blocks_from_sets(ds, n));
}

Partition Partition::from_equivalence(const Relation &eq) {
  if (!eq.is_reflexive() || !eq.is_symmetric() || !eq.is_transitive())
    throw InputError("relation is not an equivalence");
  const unsigned n = eq.size();
  std::vector<PointSet> blocks;
  PointSet seen(n);
  for (unsigned x = 0; x < n; ++x) {
    if (seen.contains(x)) continue;
    blocks.push_back(eq.image(x));
    seen |= eq.image(x);
  }
  return Partition(n, std::move(blocks));
}

Partition Partition::kernel(unsigned n, std::span<const PointSet> sets) {
  std::vector<PointSet> blocks{PointSet::full(n)};
  if (n == 0) return Partition(0, {});
  for (const auto &s : sets) {
    std::vector<PointSet> next;
    next.reserve(blocks.size() * 2);
    for (const auto &b : blocks) {
      PointSet in = b & s;
      PointSet out = b - s;
      if (!in.is_empty()) next.push_back(in);
      if (!out.is_empty()) next.push_back(out);
    }
    blocks = std::move(next);
  }
  return Partition(n, std::move(blocks));
}

PointSet Partition::saturate(const PointSet &s) const {
  PointSet out(n_);
  PointSet rest = s;
  while (auto x = rest.first()) {
    const PointSet &b = blocks_[block_of_[*x]];
    out |= b;
    rest -= b;
  }
  return out;
}

bool Partition::finer_than(const Partition &other) const {
  for (const auto &b : blocks_)
    if (!b.subset_of(other.block_of(*b.first()))) return false;
  return true;
}

Partition Partition::join(const Partition &other) const {
  DisjointSets ds(n_);
  for (const auto *p : {this, &other})
    for (const auto &b : p->blocks_) {
      unsigned head = *b.first();
      b.for_each([&](unsigned x) { ds.unite(head, x); });
    }
  return Partition(n_, blocks_from_sets(ds, n_));
}

Partition Partition::meet(const Partition &other) const {
  std::vector<PointSet> blocks;
  for (const auto &a : blocks_)
    for (const auto &b : other.blocks_)
      if (a.intersects(b)) blocks.push_back(a & b);
  return Partition(n_, std::move(blocks));
}

Relation Partition::as_relation() const {
  Relation r(n_);
  for (const auto &b : blocks_)
    b.for_each([&](unsigned x) { b.for_each([&](unsigned y) { r.insert(x, y); }); });
  return r;
}

}  // namespace ms4wb
