//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include "ms4wb/algebra.hpp"
#include "ms4wb/corpus.hpp"
#include "ms4wb/s52.hpp"
#include "support.hpp"

namespace ms4wb {
namespace {

S52Frame grid2() {
  return S52Frame::build({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}, {{"a", "c"}, {"b", "d"}});
}

S52Frame one_point() { return S52Frame::build({"x"}, {{"x"}}, {{"x"}}); }

TEST(BuildS52, Examples) {
  auto g = grid2();
  EXPECT_EQ(g.e1().block_count(), 2u);
  EXPECT_EQ(g.e2().block_count(), 2u);
  auto o = one_point();
  EXPECT_TRUE(o.e1().is_identity());
  EXPECT_TRUE(o.e2().is_identity());
  auto s = snake(4);
  EXPECT_EQ(s.size(), 4u);
}

TEST(BuildS52, MalformedPartitions) {
  EXPECT_THROW(S52Frame::build({"a", "b"}, {{"a"}}, {{"a"}, {"b"}}), FrameError);
  EXPECT_THROW(S52Frame::build({"a", "b"}, {{"a", "b"}, {"b"}}, {{"a", "b"}}), FrameError);
  EXPECT_THROW(S52Frame::build({"a", "a"}, {{"a"}}, {{"a"}}), InputError);
  EXPECT_THROW(S52Frame::build({"a"}, {{"z"}}, {{"a"}}), InputError);
}

TEST(AnalyzeS52, OnePoint) {
  auto a = analyze_s52(one_point());
  EXPECT_EQ(a.transitivity_degree, 0u);
  EXPECT_TRUE(a.is_simple);
  EXPECT_TRUE(a.is_si);
}

TEST(AnalyzeS52, SnakesAreSimpleWithGrowingDegree) {
  unsigned previous = 0;
  for (int m = 2; m <= 10; m += 2) {
    auto a = analyze_s52(snake(m));
    EXPECT_TRUE(a.s_star.is_total());
    EXPECT_TRUE(a.is_simple);
    EXPECT_GT(a.transitivity_degree, previous);
    EXPECT_EQ(a.transitivity_degree, static_cast<unsigned>(m - 1));
    previous = a.transitivity_degree;
  }
}

TEST(AnalyzeS52, DisjointSnakesAreNotSi) {
  auto f = S52Frame::build({"a", "b", "c", "d"}, {{"a"}, {"b"}, {"c"}, {"d"}},
                           {{"a", "b"}, {"c", "d"}});
  auto a = analyze_s52(f);
  EXPECT_TRUE(a.roots.is_empty());
  EXPECT_FALSE(a.is_si);
  EXPECT_FALSE(a.is_simple);
  EXPECT_EQ(a.s_star, a.s_star.reflexive_transitive_closure());
}

void expect_translation_shape(const S52Frame &f, const Frame &t) {
  unsigned classes = f.e2().block_count();
  EXPECT_EQ(t.size(), f.size() + classes);
  EXPECT_TRUE(q_relation(t).is_total());
  EXPECT_EQ(classify(t).depth, 2u);
  EXPECT_TRUE(is_valid(t, axiom("ms4s")).valid);
  ASSERT_TRUE(t.layer_tag().has_value());
  auto c = classify(t);
  EXPECT_EQ(c.layers[0].count(), classes);
  for (unsigned x = 0; x < t.size(); ++x)
    EXPECT_EQ((*t.layer_tag())[x], x < f.size() ? 2u : 1u);
}

TEST(Translate, OnePoint) {
  auto t = translate(one_point());
  EXPECT_EQ(t.names(), (std::vector<std::string>{"x", "[x]"}));
  EXPECT_TRUE(t.r().contains(0, 1));
  EXPECT_FALSE(t.r().contains(1, 0));
  EXPECT_TRUE(t.e().is_single_block());
  EXPECT_TRUE(classify(t).is_simple);
  expect_translation_shape(one_point(), t);
}

TEST(Translate, SnakeEight) {
  auto s = snake(8);
  auto t = translate(s);
  EXPECT_EQ(t.size(), 12u);
  expect_translation_shape(s, t);
  auto rail = t.set_of({"[p0]", "[p2]", "[p4]", "[p6]"});
  rail.for_each([&](unsigned x) { EXPECT_EQ(t.r().image(x), rail); });
}

TEST(Translate, GridTwo) {
  auto g = grid2();
  auto t = translate(g);
  EXPECT_EQ(t.size(), 6u);
  expect_translation_shape(g, t);
}

TEST(Translate, NameCollisionIsRejected) {
  auto f = S52Frame::build({"a", "[a]"}, {{"a"}, {"[a]"}}, {{"a"}, {"[a]"}});
  EXPECT_THROW(translate(f), InputError);
}

TEST(LiftPartition, Trivial) {
  auto s = snake(4);
  auto t = translate(s);
  EXPECT_TRUE(lift_partition(s, Partition::identity(4)).is_identity());
  auto top = lift_partition(s, Partition::single_block(4));
  ASSERT_EQ(top.block_count(), 2u);
  EXPECT_EQ(top.blocks()[0], t.set_of({"p0", "p1", "p2", "p3"}));
  EXPECT_EQ(top.blocks()[1], t.set_of({"[p0]", "[p2]"}));
}

TEST(LiftPartition, SnakeFoldCommutesWithQuotient) {
  auto s = snake(4);
  std::vector<unsigned> labels{0, 1, 1, 0};
  auto k = Partition::from_labels(labels);
  ASSERT_TRUE(is_correct_partition(s, k).correct);
  auto folded = quotient(s, k);
  EXPECT_EQ(folded.size(), 2u);
  EXPECT_TRUE(folded.e2().is_single_block());
  auto k_hat = lift_partition(s, k);
  auto t = translate(s);
  EXPECT_TRUE(is_correct_partition(t, k_hat).correct);
  EXPECT_TRUE(find_isomorphism(translate(folded), quotient(t, k_hat)).has_value());
}

TEST(LiftPartition, RejectsIncorrectPartition) {
  auto s = snake(4);
  std::vector<unsigned> labels{0, 0, 1, 2};
  auto k = Partition::from_labels(labels);
  EXPECT_FALSE(is_correct_partition(s, k).correct);
  EXPECT_THROW(lift_partition(s, k), PreconditionError);
  EXPECT_THROW(quotient(s, k), PreconditionError);
}

TEST(Relativize, OnePointTopLayer) {
  auto r = relativize(one_point(), 1);
  EXPECT_EQ(r.points.size(), 1u);
  EXPECT_EQ(relativized_algebra(r).size(), 2u);
}

TEST(Relativize, SnakeBottomLayerIsTheSnakeAlgebra) {
  auto s = snake(8);
  auto r = relativize(s, 2);
  ASSERT_TRUE(r.matches_s52.has_value());
  EXPECT_TRUE(*r.matches_s52);
  auto a = relativized_algebra(r);
  EXPECT_EQ(a.signature(), AlgebraSignature::kS52);
  EXPECT_EQ(a.size(), 256u);
  EXPECT_TRUE(algebras_isomorphic(a, powerset_algebra(s)));
}

TEST(Relativize, GridTopLayer) {
  auto r = relativize(grid2(), 1);
  EXPECT_EQ(r.points.size(), 2u);
  EXPECT_TRUE(r.ex_partition.is_identity());
  EXPECT_TRUE(r.dia_relation.is_total());
  EXPECT_FALSE(r.matches_s52.has_value());
}

TEST(Relativize, RequiresLayerTag) {
  EXPECT_THROW(relativize(fig2_f(), 1), InputError);
  auto t = translate(grid2());
  EXPECT_THROW(relativize(t, 3), InputError);
  auto r = relativize_to(fig2_g(), fig2_g().set_of({"1", "3"}));
  EXPECT_TRUE(r.dia_relation == Relation::identity(2));
  EXPECT_TRUE(r.ex_partition.is_single_block());
}

TEST(Transfer, EmptyGenerator) {
  auto s = snake(4);
  auto t = translate(s);
  auto r = subalgebra_transfer(s, {t.none()});
  EXPECT_EQ(r.b_atoms, 1u);
  EXPECT_EQ(r.b_prime_atoms, 1u);
  EXPECT_TRUE(r.k_hat_within_l);
}

TEST(Transfer, BottomLayerGenerator) {
  auto s = snake(4);
  auto t = translate(s);
  auto d2 = t.set_of({"p0", "p1", "p2", "p3"});
  auto r = subalgebra_transfer(s, {d2});
  EXPECT_EQ(r.b_atoms, 2u);  // D1 and D2
  EXPECT_EQ(r.b_prime_atoms, 1u);
  EXPECT_EQ(r.k_hat.block_count(), 2u);
  EXPECT_TRUE(r.k_hat_within_l);
}

TEST(Transfer, SnakeMixedGenerator) {
  auto s = snake(8);
  auto t = translate(s);
  auto gen = t.set_of({"p0", "[p4]"});
  auto r = subalgebra_transfer(s, {gen});
  EXPECT_TRUE(r.k_hat_within_l);
  EXPECT_LE(r.b_atoms, r.k_hat_blocks);
  auto naive = testing::naive_closure(t.size(), {gen}, testing::frame_ops(t));
  EXPECT_EQ(std::uint64_t{1} << r.b_atoms, naive.size());
  TransferContext ctx(s);
  std::uint64_t bits = gen.bits();
  EXPECT_TRUE(ctx.k_hat_within_l(&bits, 1));
}

TEST(Transfer, ContextAgreesWithFullReport) {
  auto s = snake(6);
  TransferContext ctx(s);
  auto n = ctx.translated().size();
  Rng rng(11);
  std::uniform_int_distribution<std::uint64_t> bits(0, PointSet::mask(n));
  for (int i = 0; i < 200; ++i) {
    std::uint64_t g[2] = {bits(rng), bits(rng)};
    auto report = ctx.check({PointSet(n, g[0]), PointSet(n, g[1])});
    EXPECT_EQ(ctx.k_hat_within_l(g, 2), report.k_hat_within_l);
  }
}

}  // namespace
}  // namespace ms4wb
