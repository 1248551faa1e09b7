//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_CORPUS_HPP_
#define MS4WB_CORPUS_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ms4wb/algebra.hpp"
#include "ms4wb/formula.hpp"
#include "ms4wb/frame.hpp"
#include "ms4wb/s52.hpp"

namespace ms4wb {

using AnyFrame = std::variant<Frame, S52Frame>;

struct Builtin {
  std::string name;
  std::optional<int> parameter;
  AnyFrame frame;
  std::map<std::string, PointSet> sets;  // companion sets such as g and d
};

struct BuiltinInfo {
  std::string name;
  std::string kind;       // "ms4" or "s52"
  std::string parameter;  // empty when not parameterized
  std::string summary;
};

const std::vector<BuiltinInfo> &builtin_catalog();

/// fig2F, fig2G, single: no parameter. snake(m): m even >= 2 points.
/// et_grid(m): m >= 1, exposes g = {(i,j) : i <= j}. three_layer(k): k >= 1
/// bottom points, exposes g (the marked middle point) and d (the top rail).
/// Throws InputError for unknown names and bad parameters.
Builtin builtin(std::string_view name, std::optional<int> m = std::nullopt);

Frame fig2_f();
Frame fig2_g();
Frame single_point();
S52Frame snake(int m);
S52Frame et_grid(int m);
PointSet et_generator(int m);
Frame three_layer(int k);

struct GrowthSeries {
  std::string family;
  std::vector<int> parameters;
  std::vector<std::uint64_t> sizes;  // 0 when the size is 2^64 or more
  std::vector<unsigned> atoms;
  bool truncated = false;  // a member exceeded the point budget
  bool strictly_increasing = false;
};

/// |<gens>| across a builtin family (et_grid with g, snake with the first
/// endpoint, three_layer with g), using the family's full signature.
/// Members larger than `max_points` are skipped and flagged.
GrowthSeries growth_probe(std::string_view family, const std::vector<int> &params,
                          unsigned max_points = PointSet::kMaxPoints);

struct SnChain {
  std::vector<PointSet> sets;  // s_0 .. s_{n_max}
  unsigned distinct = 0;
};

// s_0 = g, s_{n+1} = Ex Dia s_n - d.
SnChain sn_chain(const Frame &f, const PointSet &g, const PointSet &d,
                 unsigned n_max);

inline constexpr unsigned kEnumerationCap = 5;

enum class FrameKind { kMs4, kS52 };

// Exhaustive labeled enumeration in a fixed order; points are named
// "0".."n-1". Throws InputError above kEnumerationCap points.
void for_each_ms4_frame(unsigned n, const std::function<void(const Frame &)> &fn);
void for_each_s52_frame(unsigned n, const std::function<void(const S52Frame &)> &fn);
std::vector<AnyFrame> enumerate_frames(unsigned n, FrameKind kind);

// All set partitions of n points in restricted-growth order.
std::vector<Partition> all_partitions(unsigned n);

using Rng = std::mt19937_64;

// Random MS4-frame with exactly n points: random edges closed, random
// partition, then R grown until RE <= ER holds (and Q is symmetric when
// `ms4s` is set).
Frame random_frame(Rng &rng, unsigned n, bool ms4s = false, double density = 0.25);
S52Frame random_s52_frame(Rng &rng, unsigned n);

// Random formula over variables p, q, r (first `vars` of them) with at most
// the given depth, in the chosen language.
Formula random_formula(Rng &rng, unsigned depth, Language language, unsigned vars = 3);

}  // namespace ms4wb

#endif  // MS4WB_CORPUS_HPP_
