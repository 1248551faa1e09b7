//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <vector>

#include "ms4wb/partition.hpp"
#include "ms4wb/point_set.hpp"
#include "ms4wb/relation.hpp"
#include "support.hpp"

namespace ms4wb {
namespace {

TEST(PointSet, BasicOperations) {
  PointSet s(5);
  EXPECT_TRUE(s.is_empty());
  s.insert(1);
  s.insert(3);
  EXPECT_EQ(s.count(), 2u);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.complement().count(), 3u);
  EXPECT_EQ(s.first(), 1u);
  EXPECT_EQ(s.members(), (std::vector<unsigned>{1, 3}));
  s.erase(1);
  EXPECT_EQ(s, PointSet::singleton(5, 3));
  EXPECT_FALSE(PointSet::empty(5).first().has_value());
}

TEST(PointSet, FullWidth64) {
  auto full = PointSet::full(64);
  EXPECT_TRUE(full.is_full());
  EXPECT_EQ(full.count(), 64u);
  EXPECT_TRUE(full.complement().is_empty());
}

TEST(PointSet, LatticeOperators) {
  PointSet a(4, 0b0011), b(4, 0b0110);
  EXPECT_EQ((a & b).bits(), 0b0010u);
  EXPECT_EQ((a | b).bits(), 0b0111u);
  EXPECT_EQ((a - b).bits(), 0b0001u);
  EXPECT_TRUE((a & b).subset_of(a));
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE(PointSet(4, 0b1000).intersects(a));
}

TEST(Relation, ImageAndPreimage) {
  Relation r(3);
  r.insert(0, 1);
  r.insert(1, 2);
  EXPECT_EQ(r.image(PointSet::singleton(3, 0)), PointSet::singleton(3, 1));
  EXPECT_EQ(r.preimage(PointSet::singleton(3, 2)), PointSet::singleton(3, 1));
  auto closure = r.reflexive_transitive_closure();
  EXPECT_TRUE(closure.contains(0, 2));
  EXPECT_TRUE(closure.is_reflexive());
  EXPECT_TRUE(closure.is_transitive());
  EXPECT_FALSE(r.is_transitive());
  auto w = r.transitivity_witness();
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ((*w)[0], 0u);
  EXPECT_EQ((*w)[2], 2u);
}

TEST(Relation, ThenMeansApplyFirstThenSecond) {
  Relation a(3), b(3);
  a.insert(0, 1);
  b.insert(1, 2);
  auto c = a.then(b);
  for (unsigned x = 0; x < 3; ++x)
    for (unsigned y = 0; y < 3; ++y)
      EXPECT_EQ(c.contains(x, y), testing::naive_contains_composite(a, b, x, y));
  EXPECT_TRUE(c.contains(0, 2));
  EXPECT_FALSE(b.then(a).contains(0, 2));
}

TEST(Relation, TransposeAndUnion) {
  Relation a(2);
  a.insert(0, 1);
  EXPECT_TRUE(a.transpose().contains(1, 0));
  EXPECT_TRUE((a | a.transpose()).is_symmetric());
  EXPECT_TRUE(Relation::total(3).is_total());
  EXPECT_TRUE(Relation::identity(3).subset_of(Relation::total(3)));
}

TEST(Partition, CanonicalForm) {
  std::vector<PointSet> blocks{PointSet(4, 0b1010), PointSet(4, 0b0101)};
  auto p = Partition::from_blocks(4, blocks);
  ASSERT_EQ(p.block_count(), 2u);
  EXPECT_EQ(p.blocks()[0].bits(), 0b0101u);  // sorted by least member
  EXPECT_EQ(p.block_index(3), 1u);
  std::vector<unsigned> labels{7, 3, 7, 3};
  EXPECT_EQ(Partition::from_labels(labels), p);
}

TEST(Partition, RejectsMalformedBlocks) {
  std::vector<PointSet> overlap{PointSet(3, 0b011), PointSet(3, 0b110)};
  EXPECT_THROW(Partition::from_blocks(3, overlap), InputError);
  std::vector<PointSet> missing{PointSet(3, 0b011)};
  EXPECT_THROW(Partition::from_blocks(3, missing), InputError);
}

TEST(Partition, JoinMeetAndOrder) {
  std::vector<unsigned> a{0, 0, 1, 2}, b{0, 1, 1, 2};
  auto pa = Partition::from_labels(a), pb = Partition::from_labels(b);
  auto j = pa.join(pb);
  auto m = pa.meet(pb);
  EXPECT_EQ(j.block_count(), 2u);
  EXPECT_TRUE(m.is_identity());
  EXPECT_TRUE(pa.finer_than(j));
  EXPECT_TRUE(m.finer_than(pa));
  EXPECT_FALSE(j.finer_than(pa));
  EXPECT_TRUE(Partition::identity(4).finer_than(pa));
  EXPECT_TRUE(pa.finer_than(Partition::single_block(4)));
}

TEST(Partition, SaturationAndKernel) {
  std::vector<unsigned> labels{0, 0, 1, 1};
  auto p = Partition::from_labels(labels);
  EXPECT_EQ(p.saturate(PointSet::singleton(4, 2)).bits(), 0b1100u);
  EXPECT_TRUE(p.is_saturated(PointSet(4, 0b0011)));
  std::vector<PointSet> sets{PointSet(4, 0b0011), PointSet(4, 0b0110)};
  auto k = Partition::kernel(4, sets);
  EXPECT_EQ(k.block_count(), 4u);
  auto eq = p.as_relation();
  EXPECT_TRUE(eq.is_symmetric());
  EXPECT_EQ(Partition::from_equivalence(eq), p);
}

TEST(Partition, FinestContaining) {
  std::vector<PointSet> sets{PointSet(5, 0b00011), PointSet(5, 0b00110)};
  auto p = Partition::finest_containing(5, sets);
  EXPECT_EQ(p.block_count(), 3u);
  EXPECT_EQ(p.block_of(0).bits(), 0b00111u);
}

}  // namespace
}  // namespace ms4wb
