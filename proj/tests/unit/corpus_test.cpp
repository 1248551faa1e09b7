//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "ms4wb/corpus.hpp"
#include "support.hpp"

namespace ms4wb {
namespace {

nlohmann::json fixtures() {
  std::ifstream in(testing::fixture_path("growth_fixtures.json"));
  return nlohmann::json::parse(in);
}

TEST(Builtin, Single) {
  auto b = builtin("single");
  ASSERT_TRUE(std::holds_alternative<Frame>(b.frame));
  EXPECT_EQ(std::get<Frame>(b.frame).size(), 1u);
}

TEST(Builtin, EtGridGenerator) {
  auto b = builtin("et_grid", 3);
  const auto &grid = std::get<S52Frame>(b.frame);
  EXPECT_EQ(grid.size(), 9u);
  auto expected = grid.set_of({"(0,0)", "(0,1)", "(0,2)", "(1,1)", "(1,2)", "(2,2)"});
  EXPECT_EQ(b.sets.at("g"), expected);
  EXPECT_EQ(et_generator(3), expected);
  // rows are E1, columns are E2
  EXPECT_EQ(grid.ex1(grid.set_of({"(1,0)"})), grid.set_of({"(1,0)", "(1,1)", "(1,2)"}));
  EXPECT_EQ(grid.ex2(grid.set_of({"(1,0)"})), grid.set_of({"(0,0)", "(1,0)", "(2,0)"}));
}

TEST(Builtin, ThreeLayer) {
  auto b = builtin("three_layer", 2);
  const auto &f = std::get<Frame>(b.frame);
  EXPECT_EQ(f.size(), 14u);
  EXPECT_EQ(classify(f).depth, 3u);
  EXPECT_TRUE(q_relation(f).is_total());
  EXPECT_TRUE(is_valid(f, axiom("ms4s")).valid);
  EXPECT_EQ(b.sets.at("g").count(), 1u);
  EXPECT_EQ(b.sets.at("d"), classify(f).layers[0]);
}

TEST(Builtin, ThreeLayerIsMs4sAndDepthThreeAcrossSizes) {
  for (int k = 1; k <= 6; ++k) {
    auto f = three_layer(k);
    EXPECT_EQ(classify(f).depth, 3u) << k;
    EXPECT_EQ(relational_verdict(f, parse_axiom_spec("ms4s")), true) << k;
  }
}

TEST(Builtin, Errors) {
  EXPECT_THROW(builtin("fig9"), InputError);
  EXPECT_THROW(builtin("snake"), InputError);
  EXPECT_THROW(builtin("snake", 3), InputError);
  EXPECT_THROW(builtin("snake", 0), InputError);
  EXPECT_THROW(builtin("et_grid", 0), InputError);
  EXPECT_THROW(builtin("et_grid", 9), InputError);  // 81 points
  EXPECT_THROW(builtin("three_layer", 0), InputError);
  EXPECT_THROW(builtin("single", 2), InputError);
}

TEST(Builtin, AdvertisedAxioms) {
  EXPECT_TRUE(is_valid(fig2_f(), axiom("s4u.bridge")).valid);
  EXPECT_FALSE(is_valid(fig2_f(), axiom("s52.sym")).valid);
  EXPECT_TRUE(is_valid(fig2_g(), axiom("s52.sym")).valid);
  EXPECT_FALSE(is_valid(fig2_g(), axiom("s4u.bridge")).valid);
  for (int m = 2; m <= 10; m += 2) {
    auto t = translate(snake(m));
    auto c = classify(t);
    ASSERT_EQ(c.layers.size(), 2u);
    EXPECT_EQ(c.layers[0].count(), static_cast<unsigned>(m / 2));
    EXPECT_EQ(c.layers[1].count(), static_cast<unsigned>(m));
  }
}

TEST(Builtin, CatalogCoversEveryName) {
  for (const auto &info : builtin_catalog()) {
    std::optional<int> m;
    if (!info.parameter.empty()) m = 2;
    auto b = builtin(info.name, m);
    EXPECT_EQ(std::holds_alternative<S52Frame>(b.frame), info.kind == "s52") << info.name;
  }
}

TEST(Growth, EtGridMatchesFixtures) {
  auto fx = fixtures()["et_grid_one_generated"];
  auto s = growth_probe("et_grid", {1, 2, 3, 4, 5});
  ASSERT_EQ(s.sizes.size(), 5u);
  for (int m = 1; m <= 5; ++m)
    EXPECT_EQ(s.sizes[m - 1], fx[std::to_string(m)].get<std::uint64_t>()) << m;
  EXPECT_TRUE(s.strictly_increasing);
  EXPECT_FALSE(s.truncated);
}

TEST(Growth, SnakeEndpointMatchesFixtures) {
  auto fx = fixtures()["snake_endpoint"];
  auto s = growth_probe("snake", {2, 4, 6, 8, 10});
  for (std::size_t i = 0; i < s.parameters.size(); ++i)
    EXPECT_EQ(s.sizes[i], fx[std::to_string(s.parameters[i])].get<std::uint64_t>());
  EXPECT_TRUE(s.strictly_increasing);
}

TEST(Growth, TruncationIsFlagged) {
  auto s = growth_probe("et_grid", {2, 3, 9}, 16);
  EXPECT_TRUE(s.truncated);
  // The probe stops at the first member over budget.
  EXPECT_EQ(s.sizes.size(), 2u);
  EXPECT_EQ(s.parameters, (std::vector<int>{2, 3}));
  EXPECT_THROW(growth_probe("fig2F", {1}), InputError);
}

TEST(SnChain, ThreeLayerMatchesFixtures) {
  auto fx = fixtures()["three_layer_sn_distinct"];
  unsigned previous = 0;
  for (int k = 2; k <= 8; ++k) {
    auto b = builtin("three_layer", k);
    const auto &f = std::get<Frame>(b.frame);
    auto c = sn_chain(f, b.sets.at("g"), b.sets.at("d"), 4 * f.size());
    EXPECT_EQ(c.distinct, fx[std::to_string(k)].get<unsigned>()) << k;
    EXPECT_GT(c.distinct, previous);
    previous = c.distinct;
  }
}

TEST(SnChain, TrivialCases) {
  auto f = fig2_g();
  auto empty = sn_chain(f, f.none(), f.none(), 5);
  EXPECT_EQ(empty.sets.size(), 6u);
  EXPECT_EQ(empty.distinct, 1u);
  auto total = Frame::build({"a", "b", "c"}, {}, {{"a", "b", "c"}});
  auto c = sn_chain(total, total.set_of({"a"}), total.none(), 4);
  EXPECT_EQ(c.sets[1], total.full());
  EXPECT_EQ(c.distinct, 2u);
  EXPECT_THROW(sn_chain(total, PointSet(2), total.none(), 1), InputError);
}

TEST(Enumerate, CountsMatchDirectCount) {
  // Direct counts: quasi-orders x partitions filtered by RE <= ER.
  std::uint64_t ms4[] = {1, 8, 115, 2853};
  std::uint64_t s52[] = {1, 4, 25, 225};
  for (unsigned n = 1; n <= 4; ++n) {
    std::uint64_t a = 0, b = 0;
    for_each_ms4_frame(n, [&](const Frame &) { ++a; });
    for_each_s52_frame(n, [&](const S52Frame &) { ++b; });
    EXPECT_EQ(a, ms4[n - 1]) << n;
    EXPECT_EQ(b, s52[n - 1]) << n;
  }
  EXPECT_EQ(enumerate_frames(2, FrameKind::kS52).size(), 4u);
  EXPECT_THROW(enumerate_frames(6, FrameKind::kMs4), InputError);
}

TEST(Enumerate, FramesAreValidAndDistinct) {
  std::set<std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>>> seen;
  for_each_ms4_frame(3, [&](const Frame &f) {
    std::vector<std::vector<std::string>> blocks;
    for (const auto &b : f.e().blocks()) {
      std::vector<std::string> names;
      b.for_each([&](unsigned x) { names.push_back(f.name(x)); });
      blocks.push_back(names);
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (unsigned x = 0; x < 3; ++x)
      f.r().image(x).for_each([&](unsigned y) { edges.emplace_back(f.name(x), f.name(y)); });
    EXPECT_NO_THROW(Frame::build(f.names(), edges, blocks, ClosureMode::kValidate));
    std::vector<std::uint64_t> rows, eb;
    for (unsigned x = 0; x < 3; ++x) rows.push_back(f.r().image(x).bits());
    for (const auto &b : f.e().blocks()) eb.push_back(b.bits());
    EXPECT_TRUE(seen.emplace(rows, eb).second);
  });
  EXPECT_EQ(seen.size(), 115u);
}

TEST(Enumerate, PartitionsAreBellNumbers) {
  EXPECT_EQ(all_partitions(1).size(), 1u);
  EXPECT_EQ(all_partitions(4).size(), 15u);
  EXPECT_EQ(all_partitions(5).size(), 52u);
}

TEST(Random, FramesAreValid) {
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    unsigned n = 1 + i % 10;
    auto f = random_frame(rng, n, i % 2 == 0);
    EXPECT_EQ(f.size(), n);
    EXPECT_FALSE(re_er_witness(f.r(), f.e()).has_value());
    if (i % 2 == 0) EXPECT_TRUE(q_relation(f).is_symmetric());
  }
  auto s = random_s52_frame(rng, 6);
  EXPECT_EQ(s.size(), 6u);
}

TEST(Random, FormulasRespectDepthAndLanguage) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    auto f = random_formula(rng, 6, Language::kMs4);
    EXPECT_LE(f.depth(), 6u);
    EXPECT_NE(f.language(), Language::kS52);
    auto g = random_formula(rng, 4, Language::kS52, 2);
    EXPECT_NE(g.language(), Language::kMs4);
    EXPECT_LE(g.variables().size(), 2u);
  }
}

}  // namespace
}  // namespace ms4wb
