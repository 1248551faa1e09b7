//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ms4wb/frame.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <tuple>

#include "ms4wb/error.hpp"

namespace ms4wb {

namespace {

std::string triple(const std::vector<std::string> &names,
                   const std::array<unsigned, 3> &w) {
  return "(" + names[w[0]] + ", " + names[w[1]] + ", " + names[w[2]] + ")";
}

std::unordered_map<std::string, unsigned> index_names(
    const std::vector<std::string> &names) {
  std::unordered_map<std::string, unsigned> index;
  for (unsigned i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InputError("empty point name");
    if (!index.emplace(names[i], i).second)
      throw InputError("duplicate point name '" + names[i] + "'");
  }
  return index;
}

unsigned lookup(const std::unordered_map<std::string, unsigned> &index,
                const std::string &name, std::string_view where) {
  auto it = index.find(name);
  if (it == index.end())
    throw InputError("unknown point '" + name + "' in " + std::string(where));
  return it->second;
}

// Relation induced on the blocks of k: block a relates to block b iff some
// members do.
Relation induced_on_blocks(const Relation &s, const Partition &k) {
  Relation out(k.block_count());
  for (unsigned a = 0; a < k.block_count(); ++a) {
    PointSet reach = s.image(k.blocks()[a]);
    reach.for_each([&](unsigned y) { out.insert(a, k.block_index(y)); });
  }
  return out;
}

std::vector<std::string> block_names(const Frame &f, const Partition &k) {
  std::vector<std::string> names;
  for (const auto &b : k.blocks()) names.push_back(f.name(*b.first()));
  return names;
}

}  // namespace

std::optional<std::array<unsigned, 3>> re_er_witness(const Relation &r,
                                                     const Partition &e) {
  const unsigned n = r.size();
  for (unsigned x = 0; x < n; ++x) {
    PointSet er = e.saturate(r.image(x));  // (ER)(x)
    const PointSet &cls = e.block_of(x);
    std::optional<std::array<unsigned, 3>> found;
    cls.for_each([&](unsigned y) {
      if (found) return;
      if (auto y2 = (r.image(y) - er).first())
        found = std::array<unsigned, 3>{x, y, *y2};
    });
    if (found) return found;
  }
  return std::nullopt;
}

Frame Frame::build(const std::vector<std::string> &points,
                   const std::vector<std::pair<std::string, std::string>> &r_edges,
                   const std::vector<std::vector<std::string>> &e_blocks,
                   ClosureMode mode) {
  if (points.empty()) throw InputError("a frame needs at least one point");
  if (points.size() > PointSet::kMaxPoints)
    throw InputError("frames are limited to " +
                     std::to_string(PointSet::kMaxPoints) + " points");
  const auto index = index_names(points);
  const auto n = static_cast<unsigned>(points.size());

  Relation r(n);
  for (const auto &[a, b] : r_edges)
    r.insert(lookup(index, a, "R"), lookup(index, b, "R"));

  std::vector<PointSet> blocks;
  for (const auto &block : e_blocks) {
    PointSet s(n);
    for (const auto &name : block) {
      unsigned x = lookup(index, name, "E");
      if (mode == ClosureMode::kValidate && s.contains(x))
        throw FrameError("point '" + name + "' repeated in an E-block");
      s.insert(x);
    }
    blocks.push_back(s);
  }

  Partition e;
  if (mode == ClosureMode::kClose) {
    r = r.reflexive_transitive_closure();
    e = Partition::finest_containing(n, blocks);
  } else {
    for (unsigned x = 0; x < n; ++x)
      if (!r.contains(x, x))
        throw FrameError("R is not reflexive at '" + points[x] + "'");
    if (auto w = r.transitivity_witness())
      throw FrameError("R is not transitive: " + triple(points, *w));
    try {
      e = Partition::from_blocks(n, blocks);
    } catch (const InputError &err) {
      throw FrameError(std::string("E is not a partition: ") + err.what());
    }
  }
  return from_parts(points, std::move(r), std::move(e));
}

Frame Frame::from_parts(std::vector<std::string> names, Relation r, Partition e,
                        std::optional<Layers> layers) {
  Frame f;
  f.index_ = index_names(names);
  const auto n = static_cast<unsigned>(names.size());
  if (n == 0) throw InputError("a frame needs at least one point");
  if (r.size() != n || e.size() != n)
    throw InputError("relation dimension does not match the point list");
  if (!r.is_reflexive()) throw FrameError("R is not reflexive");
  if (auto w = r.transitivity_witness())
    throw FrameError("R is not transitive: " + triple(names, *w));
  if (auto w = re_er_witness(r, e))
    throw FrameError("RE <= ER fails: " + names[(*w)[0]] + " E " +
                     names[(*w)[1]] + " R " + names[(*w)[2]] +
                     " but no R-successor of " + names[(*w)[0]] +
                     " is E-related to " + names[(*w)[2]]);
  if (layers && layers->size() != n)
    throw InputError("layer tag does not cover every point");
  f.names_ = std::move(names);
  f.r_ = std::move(r);
  f.e_rel_ = e.as_relation();
  f.e_ = std::move(e);
  f.layers_ = std::move(layers);
  return f;
}

std::optional<unsigned> Frame::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

unsigned Frame::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw InputError("unknown point '" + std::string(name) + "'");
}

PointSet Frame::set_of(const std::vector<std::string> &names) const {
  PointSet s(size());
  for (const auto &name : names) s.insert(require_index(name));
  return s;
}

Frame Frame::with_layers(Layers layers) const {
  return from_parts(names_, r_, e_, std::move(layers));
}

Relation q_relation(const Frame &f) { return f.r().then(f.e_relation()); }

unsigned depth(const Relation &quasi_order) {
  const unsigned n = quasi_order.size();
  // Cluster representative = least member of R-cluster.
  std::vector<unsigned> memo(n, 0);
  std::function<unsigned(unsigned)> longest = [&](unsigned x) -> unsigned {
    if (memo[x] != 0) return memo[x];
    PointSet cluster = quasi_order.image(x) & quasi_order.preimage(x);
    PointSet above = quasi_order.image(x) - cluster;
    unsigned best = 0;
    above.for_each([&](unsigned y) { best = std::max(best, longest(y)); });
    unsigned result = best + 1;
    cluster.for_each([&](unsigned y) { memo[y] = result; });
    return result;
  };
  unsigned best = 0;
  for (unsigned x = 0; x < n; ++x) best = std::max(best, longest(x));
  return best;
}

FrameClassification classify(const Frame &f) {
  FrameClassification c;
  const Relation &r = f.r();
  c.depth = depth(r);

  PointSet remaining = f.full();
  while (!remaining.is_empty()) {
    PointSet layer(f.size());
    remaining.for_each([&](unsigned x) {
      if ((r.image(x) & remaining).subset_of(r.preimage(x))) layer.insert(x);
    });
    c.layers.push_back(layer);
    remaining -= layer;
  }

  const Relation q = q_relation(f);
  c.q_roots = PointSet(f.size());
  for (unsigned x = 0; x < f.size(); ++x)
    if (q.image(x).is_full()) c.q_roots.insert(x);
  c.is_si = !c.q_roots.is_empty();
  c.is_simple = c.q_roots.is_full();
  return c;
}

Frame skeleton(const Frame &f) {
  const Partition &e = f.e();
  Relation r = induced_on_blocks(f.r(), e);
  return Frame::from_parts(block_names(f, e), std::move(r),
                           Partition::identity(e.block_count()));
}

std::optional<std::array<unsigned, 3>> correctness_witness(const Relation &s,
                                                           const Partition &k) {
  for (unsigned x = 0; x < s.size(); ++x) {
    PointSet ks = k.saturate(s.image(x));  // (KS)(x)
    std::optional<std::array<unsigned, 3>> found;
    k.block_of(x).for_each([&](unsigned y) {
      if (found) return;
      if (auto y2 = (s.image(y) - ks).first())
        found = std::array<unsigned, 3>{x, y, *y2};
    });
    if (found) return found;
  }
  return std::nullopt;
}

CorrectnessVerdict is_correct_partition(const Frame &f, const Partition &k) {
  if (k.size() != f.size())
    throw InputError("partition does not match the frame's point count");
  CorrectnessVerdict v;
  if (auto w = correctness_witness(f.r(), k)) {
    v.correct = false;
    v.failed = CorrectnessVerdict::Clause::kR;
    v.witness = *w;
  } else if (auto w2 = correctness_witness(f.e_relation(), k)) {
    v.correct = false;
    v.failed = CorrectnessVerdict::Clause::kE;
    v.witness = *w2;
  }
  return v;
}

std::vector<unsigned> quotient_map(const Partition &k) {
  std::vector<unsigned> map(k.size());
  for (unsigned x = 0; x < k.size(); ++x) map[x] = k.block_index(x);
  return map;
}

Frame quotient(const Frame &f, const Partition &k) {
  auto verdict = is_correct_partition(f, k);
  if (!verdict.correct) {
    const auto &w = verdict.witness;
    throw PreconditionError(
        std::string("partition is not correct with respect to ") +
        (verdict.failed == CorrectnessVerdict::Clause::kR ? "R" : "E") +
        ": witness " + triple(f.names(), w));
  }
  Relation r = induced_on_blocks(f.r(), k);
  Relation e = induced_on_blocks(f.e_relation(), k);
  try {
    return Frame::from_parts(block_names(f, k), std::move(r),
                             Partition::from_equivalence(e));
  } catch (const InputError &err) {
    throw InvariantError(std::string("quotient by a correct partition is not a frame: ") +
                         err.what());
  }
}

MorphismVerdict check_p_morphism(const PointMap &f, const Relation &s,
                                 const Relation &t, std::string_view label) {
  MorphismVerdict v;
  for (unsigned x = 0; x < s.size(); ++x) {
    PointSet mapped(t.size());
    s.image(x).for_each([&](unsigned y) { mapped.insert(f[y]); });
    const PointSet &target = t.image(f[x]);
    if (auto y = (mapped - target).first()) {
      v.ok = false;
      v.failed = std::string(label) + "-forth";
      v.x = x;
      v.y = *y;
      return v;
    }
    if (auto y = (target - mapped).first()) {
      v.ok = false;
      v.failed = std::string(label) + "-back";
      v.x = x;
      v.y = *y;
      return v;
    }
  }
  return v;
}

MorphismVerdict is_p_morphism(const PointMap &f, const Frame &from,
                              const Frame &to) {
  if (f.size() != from.size())
    return MorphismVerdict{false, "map", static_cast<unsigned>(f.size()), 0};
  for (unsigned x = 0; x < f.size(); ++x)
    if (f[x] >= to.size()) return MorphismVerdict{false, "map", x, f[x]};
  if (auto v = check_p_morphism(f, from.r(), to.r(), "R"); !v.ok) return v;
  return check_p_morphism(f, from.e_relation(), to.e_relation(), "E");
}

namespace {

struct PointInvariant {
  unsigned r_out, r_in, e_size, cluster_size, layer;
  friend bool operator==(const PointInvariant &, const PointInvariant &) = default;
};

std::vector<PointInvariant> invariants(const Frame &f) {
  const auto cls = classify(f);
  std::vector<PointInvariant> out(f.size());
  for (unsigned x = 0; x < f.size(); ++x) {
    unsigned layer = 0;
    for (unsigned i = 0; i < cls.layers.size(); ++i)
      if (cls.layers[i].contains(x)) layer = i;
    out[x] = {f.r().image(x).count(), f.r().preimage(x).count(),
              f.e().block_of(x).count(),
              (f.r().image(x) & f.r().preimage(x)).count(), layer};
  }
  return out;
}

}  // namespace

std::optional<PointMap> find_isomorphism(const Frame &f, const Frame &g,
                                         unsigned cap) {
  if (f.size() > cap || g.size() > cap)
    throw BudgetError("isomorphism search is capped at " + std::to_string(cap) +
                      " points");
  if (f.size() != g.size()) return std::nullopt;
  const unsigned n = f.size();
  const auto inv_f = invariants(f);
  const auto inv_g = invariants(g);

  PointMap map(n, 0);
  PointSet used(n);
  std::function<bool(unsigned)> extend = [&](unsigned i) -> bool {
    if (i == n) return true;
    for (unsigned j = 0; j < n; ++j) {
      if (used.contains(j) || !(inv_f[i] == inv_g[j])) continue;
      bool consistent = true;
      for (unsigned a = 0; a < i && consistent; ++a) {
        unsigned b = map[a];
        consistent = f.r().contains(i, a) == g.r().contains(j, b) &&
                     f.r().contains(a, i) == g.r().contains(b, j) &&
                     f.e_relation().contains(i, a) == g.e_relation().contains(j, b);
      }
      if (!consistent || f.r().contains(i, i) != g.r().contains(j, j)) continue;
      map[i] = j;
      used.insert(j);
      if (extend(i + 1)) return true;
      used.erase(j);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;

  PointMap inverse(n);
  for (unsigned x = 0; x < n; ++x) inverse[map[x]] = x;
  if (!is_p_morphism(map, f, g).ok || !is_p_morphism(inverse, g, f).ok)
    throw InvariantError("isomorphism search produced a non-isomorphism");
  return map;
}

}  // namespace ms4wb
