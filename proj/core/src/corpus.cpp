//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ms4wb/corpus.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ms4wb/error.hpp"

namespace ms4wb {

namespace {

std::vector<std::string> numbered(const std::string &prefix, unsigned n) {
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

int require_parameter(std::string_view name, std::optional<int> m) {
  if (!m) throw InputError("builtin '" + std::string(name) + "' needs a parameter");
  return *m;
}

}  // namespace

const std::vector<BuiltinInfo> &builtin_catalog() {
  static const std::vector<BuiltinInfo> catalog{
      {"fig2F", "ms4", "", "two-point chain a -> b inside one E-class"},
      {"fig2G", "ms4", "", "two R-clusters {1,2}, {3,4} crossed by E-columns {1,3}, {2,4}"},
      {"single", "ms4", "", "one reflexive point"},
      {"snake", "s52", "m (even, >= 2)", "m-point path alternating E2 and E1 steps"},
      {"et_grid", "s52", "m (>= 1)", "m x m grid, E1 rows, E2 columns; set g = {(i,j) : i <= j}"},
      {"three_layer", "ms4", "k (>= 1)",
       "three-layer frame of depth 3 with 6k+2 points; sets g and d"},
  };
  return catalog;
}

Frame fig2_f() { return Frame::build({"a", "b"}, {{"a", "b"}}, {{"a", "b"}}); }

Frame fig2_g() {
  return Frame::build({"1", "2", "3", "4"},
                      {{"1", "2"}, {"2", "1"}, {"3", "4"}, {"4", "3"}},
                      {{"1", "3"}, {"2", "4"}});
}

Frame single_point() { return Frame::build({"x"}, {}, {{"x"}}); }

S52Frame snake(int m) {
  if (m < 2 || m % 2 != 0 || m > static_cast<int>(PointSet::kMaxPoints))
    throw InputError("snake needs an even number of points between 2 and 64");
  auto names = numbered("p", static_cast<unsigned>(m));
  std::vector<std::vector<std::string>> e1, e2;
  for (int p = 0; p < m; p += 2) e2.push_back({names[p], names[p + 1]});
  e1.push_back({names[0]});
  for (int p = 1; p + 1 < m; p += 2) e1.push_back({names[p], names[p + 1]});
  e1.push_back({names[m - 1]});
  return S52Frame::build(names, e1, e2);
}

S52Frame et_grid(int m) {
  if (m < 1 || m * m > static_cast<int>(PointSet::kMaxPoints))
    throw InputError("et_grid needs 1 <= m <= 8");
  std::vector<std::string> names;
  auto name = [](int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  std::vector<std::vector<std::string>> rows(m), cols(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      names.push_back(name(i, j));
      rows[i].push_back(name(i, j));
      cols[j].push_back(name(i, j));
    }
  return S52Frame::build(names, rows, cols);
}

PointSet et_generator(int m) {
  PointSet g(static_cast<unsigned>(m * m));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) g.insert(static_cast<unsigned>(i * m + j));
  return g;
}

Frame three_layer(int k) {
  if (k < 1 || 6 * k + 2 > static_cast<int>(PointSet::kMaxPoints))
    throw InputError("three_layer needs 1 <= k <= 10");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::vector<std::string>> classes;
  auto pt = [](char kind, int c) { return std::string(1, kind) + std::to_string(c); };
  for (int c = 0; c <= 2 * k; ++c) {
    std::vector<std::string> cls{pt('t', c), pt('a', c)};
    edges.emplace_back(pt('a', c), pt('t', c));
    if (c % 2 == 1) {
      cls.push_back(pt('e', c));
      edges.emplace_back(pt('e', c), pt('t', c));
      edges.emplace_back(pt('a', c - 1), pt('a', c));
      edges.emplace_back(pt('a', c), pt('a', c - 1));
    }
    if (c % 2 == 0 && c >= 2) {
      cls.push_back(pt('b', c));
      edges.emplace_back(pt('b', c), pt('e', c - 1));
    }
    if (c > 0) {
      edges.emplace_back(pt('t', c - 1), pt('t', c));
      edges.emplace_back(pt('t', c), pt('t', c - 1));
    }
    names.insert(names.end(), cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return Frame::build(names, edges, classes);
}

Builtin builtin(std::string_view name, std::optional<int> m) {
  Builtin b{std::string(name), m, Frame{}, {}};
  auto no_parameter = [&] {
    if (m) throw InputError("builtin '" + std::string(name) + "' takes no parameter");
  };
  if (name == "fig2F") {
    no_parameter();
    b.frame = fig2_f();
  } else if (name == "fig2G") {
    no_parameter();
    b.frame = fig2_g();
  } else if (name == "single") {
    no_parameter();
    b.frame = single_point();
  } else if (name == "snake") {
    b.frame = snake(require_parameter(name, m));
  } else if (name == "et_grid") {
    int k = require_parameter(name, m);
    b.frame = et_grid(k);
    b.sets.emplace("g", et_generator(k));
  } else if (name == "three_layer") {
    Frame f = three_layer(require_parameter(name, m));
    PointSet d(f.size());
    for (unsigned x = 0; x < f.size(); ++x)
      if (f.name(x)[0] == 't') d.insert(x);
    b.sets.emplace("g", f.set_of({"a0"}));
    b.sets.emplace("d", d);
    b.frame = std::move(f);
  } else {
    throw InputError("unknown builtin '" + std::string(name) + "'");
  }
  return b;
}

GrowthSeries growth_probe(std::string_view family, const std::vector<int> &params,
                          unsigned max_points) {
  GrowthSeries s;
  s.family = std::string(family);
  for (int m : params) {
    long long points = 0;
    if (family == "et_grid") points = static_cast<long long>(m) * m;
    else if (family == "snake") points = m;
    else if (family == "three_layer") points = 6LL * m + 2;
    else throw InputError("growth probes run on et_grid, snake or three_layer");
    if (points > max_points || points > PointSet::kMaxPoints) {
      s.truncated = true;
      break;
    }
    SubalgebraReport rep;
    if (family == "et_grid") {
      rep = generated_subalgebra(et_grid(m), {et_generator(m)});
    } else if (family == "snake") {
      S52Frame f = snake(m);
      rep = generated_subalgebra(f, {PointSet::singleton(f.size(), 0)});
    } else {
      Builtin b = builtin("three_layer", m);
      rep = generated_subalgebra(std::get<Frame>(b.frame), {b.sets.at("g")});
    }
    s.parameters.push_back(m);
    s.sizes.push_back(rep.size);
    s.atoms.push_back(rep.atom_count);
  }
  s.strictly_increasing = true;
  for (std::size_t i = 1; i < s.atoms.size(); ++i)
    if (s.atoms[i] <= s.atoms[i - 1]) s.strictly_increasing = false;
  return s;
}

SnChain sn_chain(const Frame &f, const PointSet &g, const PointSet &d, unsigned n_max) {
  if (g.width() != f.size() || d.width() != f.size())
    throw InputError("g and d must be subsets of the frame");
  SnChain chain;
  PointSet s = g;
  std::set<PointSet> seen;
  for (unsigned i = 0; i <= n_max; ++i) {
    chain.sets.push_back(s);
    seen.insert(s);
    s = f.ex(f.dia(s)) - d;
  }
  chain.distinct = static_cast<unsigned>(seen.size());
  return chain;
}

std::vector<Partition> all_partitions(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> label(n, 0);
  std::function<void(unsigned, unsigned)> go = [&](unsigned x, unsigned used) {
    if (x == n) {
      out.push_back(Partition::from_labels(label));
      return;
    }
    for (unsigned l = 0; l <= used; ++l) {
      label[x] = l;
      go(x + 1, std::max(used, l + 1));
    }
  };
  if (n == 0) return out;
  label[0] = 0;
  go(1, 1);
  return out;
}

void for_each_ms4_frame(unsigned n, const std::function<void(const Frame &)> &fn) {
  if (n == 0 || n > kEnumerationCap)
    throw InputError("exhaustive enumeration needs 1 <= n <= " +
                     std::to_string(kEnumerationCap));
  const auto names = numbered("", n);
  const auto partitions = all_partitions(n);
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      if (x != y) pairs.emplace_back(x, y);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::uint64_t rows[PointSet::kMaxPoints] = {};
    for (unsigned x = 0; x < n; ++x) rows[x] = std::uint64_t{1} << x;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) rows[pairs[i].first] |= std::uint64_t{1} << pairs[i].second;
    bool transitive = true;
    for (unsigned x = 0; x < n && transitive; ++x)
      for (unsigned y = 0; y < n; ++y)
        if (((rows[x] >> y) & 1U) && (rows[y] & ~rows[x])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;
    Relation r(n);
    for (unsigned x = 0; x < n; ++x)
      PointSet(n, rows[x]).for_each([&](unsigned y) { r.insert(x, y); });
    for (const auto &e : partitions) {
      if (re_er_witness(r, e)) continue;
      fn(Frame::from_parts(names, r, e));
    }
  }
}

void for_each_s52_frame(unsigned n, const std::function<void(const S52Frame &)> &fn) {
  if (n == 0 || n > kEnumerationCap)
    throw InputError("exhaustive enumeration needs 1 <= n <= " +
                     std::to_string(kEnumerationCap));
  const auto names = numbered("", n);
  const auto partitions = all_partitions(n);
  for (const auto &e1 : partitions)
    for (const auto &e2 : partitions) fn(S52Frame::from_parts(names, e1, e2));
}

std::vector<AnyFrame> enumerate_frames(unsigned n, FrameKind kind) {
  std::vector<AnyFrame> out;
  if (kind == FrameKind::kMs4)
    for_each_ms4_frame(n, [&](const Frame &f) { out.emplace_back(f); });
  else
    for_each_s52_frame(n, [&](const S52Frame &f) { out.emplace_back(f); });
  return out;
}

namespace {

Partition random_partition(Rng &rng, unsigned n) {
  std::uniform_int_distribution<unsigned> blocks(1, n);
  std::uniform_int_distribution<unsigned> pick(0, blocks(rng) - 1);
  std::vector<unsigned> labels(n);
  for (auto &l : labels) l = pick(rng);
  return Partition::from_labels(labels);
}

}  // namespace

Frame random_frame(Rng &rng, unsigned n, bool ms4s, double density) {
  if (n == 0 || n > PointSet::kMaxPoints) throw InputError("bad point count");
  std::bernoulli_distribution edge(density);
  Relation r(n);
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      if (x != y && edge(rng)) r.insert(x, y);
  Partition e = random_partition(rng, n);
  for (;;) {
    r = r.reflexive_transitive_closure();
    if (auto w = re_er_witness(r, e)) {
      r.insert((*w)[0], (*w)[2]);
      continue;
    }
    if (ms4s) {
      Relation q = r.then(e.as_relation());
      bool repaired = false;
      for (unsigned x = 0; x < n && !repaired; ++x) {
        auto missing = (q.image(x) - q.preimage(x)).first();
        if (missing) {
          r.insert(*missing, x);
          repaired = true;
        }
      }
      if (repaired) continue;
    }
    break;
  }
  return Frame::from_parts(numbered("", n), std::move(r), std::move(e));
}

S52Frame random_s52_frame(Rng &rng, unsigned n) {
  if (n == 0 || n > PointSet::kMaxPoints) throw InputError("bad point count");
  Partition e1 = random_partition(rng, n);
  Partition e2 = random_partition(rng, n);
  return S52Frame::from_parts(numbered("", n), std::move(e1), std::move(e2));
}

Formula random_formula(Rng &rng, unsigned depth, Language language, unsigned vars) {
  static const char *const kNames[] = {"p", "q", "r", "s"};
  vars = std::clamp(vars, 1U, 4U);
  std::uniform_int_distribution<unsigned> coin(0, 99);
  auto leaf = [&]() {
    unsigned c = coin(rng);
    if (c < 8) return Formula::bot();
    if (c < 16) return Formula::top();
    return Formula::var(kNames[c % vars]);
  };
  if (depth <= 1) return leaf();
  std::vector<Connective> unary{Connective::kNot};
  if (language == Language::kMs4)
    unary.insert(unary.end(), {Connective::kDia, Connective::kBox, Connective::kEx,
                               Connective::kAll});
  if (language == Language::kS52)
    unary.insert(unary.end(), {Connective::kEx1, Connective::kAll1, Connective::kEx2,
                               Connective::kAll2});
  unsigned c = coin(rng);
  if (c < 15) return leaf();
  if (c < 55) {
    std::uniform_int_distribution<std::size_t> pick(0, unary.size() - 1);
    return Formula::unary(unary[pick(rng)], random_formula(rng, depth - 1, language, vars));
  }
  static const Connective kBinary[] = {Connective::kAnd, Connective::kOr,
                                       Connective::kImplies};
  return Formula::binary(kBinary[c % 3], random_formula(rng, depth - 1, language, vars),
                         random_formula(rng, depth - 1, language, vars));
}

}  // namespace ms4wb
