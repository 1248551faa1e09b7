//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ms4wb/s52.hpp"

#include <functional>
#include <map>
#include <string>

#include "ms4wb/algebra.hpp"
#include "ms4wb/error.hpp"
#include "refine.hpp"

namespace ms4wb {

namespace {

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

Partition strict_partition(const std::unordered_map<std::string, unsigned> &index,
                           unsigned n,
                           const std::vector<std::vector<std::string>> &blocks,
                           std::string_view which) {
  std::vector<PointSet> sets;
  for (const auto &block : blocks) {
    PointSet s(n);
    for (const auto &name : block) {
      auto it = index.find(name);
      if (it == index.end())
        throw InputError("unknown point '" + name + "' in " + std::string(which));
      if (s.contains(it->second))
        throw FrameError("point '" + name + "' repeated in an " + std::string(which) +
                         "-block");
      s.insert(it->second);
    }
    sets.push_back(s);
  }
  try {
    return Partition::from_blocks(n, sets);
  } catch (const InputError &e) {
    throw FrameError(std::string(which) + " is not a partition: " + e.what());
  }
}

Relation induced(const Relation &s, const Partition &k) {
  Relation out(k.block_count());
  for (unsigned a = 0; a < k.block_count(); ++a)
    s.image(k.blocks()[a]).for_each([&](unsigned y) { out.insert(a, k.block_index(y)); });
  return out;
}

}  // namespace

S52Frame S52Frame::build(const std::vector<std::string> &points,
                         const std::vector<std::vector<std::string>> &e1_blocks,
                         const std::vector<std::vector<std::string>> &e2_blocks) {
  if (points.empty()) throw InputError("a frame needs at least one point");
  if (points.size() > PointSet::kMaxPoints)
    throw InputError("frames are limited to " + std::to_string(PointSet::kMaxPoints) +
                     " points");
  auto index = index_names(points);
  const auto n = static_cast<unsigned>(points.size());
  Partition e1 = strict_partition(index, n, e1_blocks, "E1");
  Partition e2 = strict_partition(index, n, e2_blocks, "E2");
  return from_parts(points, std::move(e1), std::move(e2));
}

S52Frame S52Frame::from_parts(std::vector<std::string> names, Partition e1,
                              Partition e2) {
  S52Frame f;
  f.index_ = index_names(names);
  if (names.empty()) throw InputError("a frame needs at least one point");
  if (e1.size() != names.size() || e2.size() != names.size())
    throw InputError("partition size does not match the point list");
  f.names_ = std::move(names);
  f.e1_rel_ = e1.as_relation();
  f.e2_rel_ = e2.as_relation();
  f.e1_ = std::move(e1);
  f.e2_ = std::move(e2);
  return f;
}

std::optional<unsigned> S52Frame::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

unsigned S52Frame::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw InputError("unknown point '" + std::string(name) + "'");
}

PointSet S52Frame::set_of(const std::vector<std::string> &names) const {
  PointSet s(size());
  for (const auto &name : names) s.insert(require_index(name));
  return s;
}

S52Analysis analyze_s52(const S52Frame &f) {
  S52Analysis a;
  a.s_relation = f.e1_relation() | f.e2_relation();
  a.s_star = a.s_relation.reflexive_transitive_closure();
  a.roots = PointSet(f.size());
  for (unsigned x = 0; x < f.size(); ++x)
    if (a.s_star.image(x).is_full()) a.roots.insert(x);
  a.is_si = !a.roots.is_empty();
  a.is_simple = a.roots.is_full();
  Relation power = Relation::identity(f.size());
  for (unsigned k = 0;; ++k) {
    Relation next = power.then(a.s_relation);
    if (next == power) {
      a.transitivity_degree = k;
      break;
    }
    power = std::move(next);
  }
  return a;
}

CorrectnessVerdict is_correct_partition(const S52Frame &f, const Partition &k) {
  if (k.size() != f.size())
    throw InputError("partition does not match the frame's point count");
  CorrectnessVerdict v;
  if (auto w = correctness_witness(f.e1_relation(), k)) {
    v.correct = false;
    v.failed = CorrectnessVerdict::Clause::kR;
    v.witness = *w;
  } else if (auto w2 = correctness_witness(f.e2_relation(), k)) {
    v.correct = false;
    v.failed = CorrectnessVerdict::Clause::kE;
    v.witness = *w2;
  }
  return v;
}

namespace {

[[noreturn]] void refuse(const S52Frame &f, const CorrectnessVerdict &v) {
  const auto &w = v.witness;
  throw PreconditionError(
      std::string("partition is not correct with respect to ") +
      (v.failed == CorrectnessVerdict::Clause::kR ? "E1" : "E2") + ": witness (" +
      f.name(w[0]) + ", " + f.name(w[1]) + ", " + f.name(w[2]) + ")");
}

}  // namespace

S52Frame quotient(const S52Frame &f, const Partition &k) {
  auto v = is_correct_partition(f, k);
  if (!v.correct) refuse(f, v);
  std::vector<std::string> names;
  for (const auto &b : k.blocks()) names.push_back(f.name(*b.first()));
  try {
    return S52Frame::from_parts(std::move(names),
                                Partition::from_equivalence(induced(f.e1_relation(), k)),
                                Partition::from_equivalence(induced(f.e2_relation(), k)));
  } catch (const InputError &e) {
    throw InvariantError(std::string("quotient of an S5_2-frame is malformed: ") + e.what());
  }
}

std::optional<PointMap> find_isomorphism(const S52Frame &f, const S52Frame &g,
                                         unsigned cap) {
  if (f.size() > cap || g.size() > cap)
    throw BudgetError("isomorphism search is capped at " + std::to_string(cap) +
                      " points");
  if (f.size() != g.size()) return std::nullopt;
  const unsigned n = f.size();
  auto signature = [](const S52Frame &h, unsigned x) {
    return std::pair{h.e1().block_of(x).count(), h.e2().block_of(x).count()};
  };
  PointMap map(n, 0);
  PointSet used(n);
  std::function<bool(unsigned)> extend = [&](unsigned i) -> bool {
    if (i == n) return true;
    for (unsigned j = 0; j < n; ++j) {
      if (used.contains(j) || signature(f, i) != signature(g, j)) continue;
      bool consistent = true;
      for (unsigned a = 0; a < i && consistent; ++a)
        consistent = f.e1_relation().contains(i, a) == g.e1_relation().contains(j, map[a]) &&
                     f.e2_relation().contains(i, a) == g.e2_relation().contains(j, map[a]);
      if (!consistent) continue;
      map[i] = j;
      used.insert(j);
      if (extend(i + 1)) return true;
      used.erase(j);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

Frame translate(const S52Frame &f) {
  const unsigned n = f.size();
  const unsigned classes = f.e2().block_count();
  const unsigned total = n + classes;
  if (total > PointSet::kMaxPoints)
    throw InputError("translation would have " + std::to_string(total) +
                     " points, above the limit of " +
                     std::to_string(PointSet::kMaxPoints));
  std::vector<std::string> names = f.names();
  for (const auto &b : f.e2().blocks()) {
    std::string label = "[" + f.name(*b.first()) + "]";
    if (f.index_of(label))
      throw InputError("class point name '" + label + "' collides with a point");
    names.push_back(std::move(label));
  }
  Relation r(total);
  std::vector<PointSet> e_blocks;
  for (unsigned x = 0; x < n; ++x) {
    f.e1_relation().image(x).for_each([&](unsigned y) { r.insert(x, y); });
    for (unsigned c = 0; c < classes; ++c) r.insert(x, n + c);
  }
  for (unsigned c = 0; c < classes; ++c) {
    for (unsigned d = 0; d < classes; ++d) r.insert(n + c, n + d);
    PointSet block(total, f.e2().blocks()[c].bits());
    block.insert(n + c);
    e_blocks.push_back(block);
  }
  Frame::Layers layers(total, 2);
  for (unsigned c = 0; c < classes; ++c) layers[n + c] = 1;

  Frame t;
  try {
    t = Frame::from_parts(std::move(names), std::move(r),
                          Partition::from_blocks(total, e_blocks), std::move(layers));
  } catch (const InputError &e) {
    throw InvariantError(std::string("translation is not an MS4-frame: ") + e.what());
  }
  const Relation q = q_relation(t);
  if (!q.is_symmetric()) throw InvariantError("translation does not validate ms4s");
  if (!q.is_total()) throw InvariantError("translation is not Q-total");
  auto cls = classify(t);
  PointSet top(total, PointSet::mask(total) & ~PointSet::mask(n));
  if (cls.depth != 2 || cls.layers.size() != 2 || cls.layers[0] != top)
    throw InvariantError("translation does not have the expected two layers");
  return t;
}

namespace {

// Labels for K-hat over the points of T(F).
std::vector<unsigned> lift_labels(const S52Frame &f, const Partition &k) {
  const unsigned n = f.size();
  std::vector<unsigned> labels(n + f.e2().block_count());
  for (unsigned x = 0; x < n; ++x) labels[x] = k.block_index(x);
  std::map<std::uint64_t, unsigned> by_saturation;
  for (unsigned c = 0; c < f.e2().block_count(); ++c) {
    std::uint64_t sat = k.saturate(f.e2().blocks()[c]).bits();
    auto it = by_saturation.try_emplace(sat, k.block_count() + by_saturation.size()).first;
    labels[n + c] = it->second;
  }
  return labels;
}

}  // namespace

Partition lift_partition(const S52Frame &f, const Partition &k) {
  auto v = is_correct_partition(f, k);
  if (!v.correct) refuse(f, v);
  Partition hat = Partition::from_labels(lift_labels(f, k));
  Frame t = translate(f);
  if (!is_correct_partition(t, hat).correct)
    throw InvariantError("lifted partition is not correct on the translation");
  return hat;
}

Relativization relativize_to(const Frame &f, const PointSet &d) {
  if (d.width() != f.size()) throw InputError("subset has the wrong width");
  if (d.is_empty()) throw InputError("cannot relativize to the empty set");
  Relativization rel;
  rel.points = d.members();
  const auto m = static_cast<unsigned>(rel.points.size());
  rel.dia_relation = Relation(m);
  std::vector<unsigned> labels(m);
  for (unsigned i = 0; i < m; ++i) {
    labels[i] = f.e().block_index(rel.points[i]);
    for (unsigned j = 0; j < m; ++j)
      if (f.r().contains(rel.points[i], rel.points[j])) rel.dia_relation.insert(i, j);
  }
  rel.ex_partition = Partition::from_labels(labels);
  return rel;
}

Relativization relativize(const Frame &layered, unsigned layer) {
  const auto &tag = layered.layer_tag();
  if (!tag) throw InputError("frame carries no layer tag");
  PointSet d(layered.size());
  for (unsigned x = 0; x < layered.size(); ++x)
    if ((*tag)[x] == layer) d.insert(x);
  if (d.is_empty()) throw InputError("layer " + std::to_string(layer) + " is empty");
  Relativization rel = relativize_to(layered, d);
  rel.layer = layer;
  return rel;
}

Relativization relativize(const S52Frame &f, unsigned layer) {
  Relativization rel = relativize(translate(f), layer);
  if (layer == 2)
    rel.matches_s52 = rel.dia_relation == f.e1_relation() && rel.ex_partition == f.e2();
  return rel;
}

FiniteAlgebra relativized_algebra(const Relativization &r) {
  const auto m = static_cast<unsigned>(r.points.size());
  Relation dia = r.dia_relation;
  Partition ex = r.ex_partition;
  auto dia_fn = [dia](const PointSet &a) { return dia.preimage(a); };
  auto ex_fn = [ex](const PointSet &a) { return ex.saturate(a); };
  std::map<Op, FiniteAlgebra::OpFn> ops;
  AlgebraSignature sig = AlgebraSignature::kMs4;
  if (r.layer == 2) {
    ops = {{Op::kEx1, dia_fn}, {Op::kEx2, ex_fn}};
    sig = AlgebraSignature::kS52;
  } else {
    ops = {{Op::kDia, dia_fn}, {Op::kEx, ex_fn}};
  }
  if (m > kPowersetCap) return FiniteAlgebra::lazy(m, std::move(ops), sig);
  std::vector<PointSet> carrier;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) carrier.emplace_back(m, s);
  return FiniteAlgebra(m, std::move(carrier), std::move(ops), sig);
}

// ---------------------------------------------------------------------------
// Subalgebra transfer

TransferContext::TransferContext(const S52Frame &f)
    : f_(f), tf_(translate(f)), n_(f.size()), classes_(f.e2().block_count()) {
  const unsigned total = n_ + classes_;
  d2_ = PointSet::mask(n_);
  d1_ = PointSet::mask(total) & ~d2_;
  for (unsigned x = 0; x < total; ++x) {
    tf_dia_.push_back(tf_.r().preimage(x).bits());
    tf_ex_.push_back(tf_.e_relation().preimage(x).bits());
  }
  for (unsigned x = 0; x < n_; ++x) {
    e1_.push_back(f.e1().block_of(x).bits());
    e2_.push_back(f.e2().block_of(x).bits());
    class_of_.push_back(f.e2().block_index(x));
  }
  for (const auto &b : f.e2().blocks()) class_members_.push_back(b.bits());
}

bool TransferContext::k_hat_within_l(const std::uint64_t *gens, unsigned count) const {
  const unsigned total = n_ + classes_;
  detail::MaskRefiner l(PointSet::mask(total));
  for (unsigned i = 0; i < count; ++i) l.split(gens[i]);
  const std::vector<std::uint64_t> *tf_ops[] = {&tf_dia_, &tf_ex_};
  l.stabilize(tf_ops, 2);

  detail::MaskRefiner k(d2_);
  for (unsigned i = 0; i < count; ++i) {
    k.split(gens[i] & d2_);
    std::uint64_t lifted = 0;
    for (std::uint64_t top = gens[i] & d1_; top != 0; top &= top - 1)
      lifted |= class_members_[static_cast<unsigned>(std::countr_zero(top)) - n_];
    k.split(lifted);
  }
  const std::vector<std::uint64_t> *s52_ops[] = {&e1_, &e2_};
  k.stabilize(s52_ops, 2);

  unsigned char l_label[64];
  l.labels(l_label);
  // K-blocks on X must sit inside L-blocks.
  for (unsigned b = 0; b < k.count(); ++b) {
    std::uint64_t blk = k.block(b);
    unsigned want = l_label[std::countr_zero(blk)];
    for (std::uint64_t rest = blk; rest != 0; rest &= rest - 1)
      if (l_label[std::countr_zero(rest)] != want) return false;
  }
  // Class points with equal K-saturation must share an L-block.
  unsigned char k_label[64];
  k.labels(k_label);
  std::uint64_t sat[64];
  for (unsigned c = 0; c < classes_; ++c) {
    std::uint64_t s = 0;
    for (std::uint64_t rest = class_members_[c]; rest != 0; rest &= rest - 1)
      s |= k.block(k_label[std::countr_zero(rest)]);
    sat[c] = s;
    for (unsigned d = 0; d < c; ++d)
      if (sat[d] == s && l_label[n_ + d] != l_label[n_ + c]) return false;
  }
  return true;
}

TransferReport TransferContext::check(const std::vector<PointSet> &gens) const {
  TransferReport rep;
  rep.generators = gens;
  const unsigned total = n_ + classes_;
  for (const auto &g : gens) {
    if (g.width() != total) throw InputError("generator is not a subset of T(F)");
    rep.s52_generators.emplace_back(n_, g.bits() & d2_);
    PointSet lifted(n_);
    (g & PointSet(total, d1_)).for_each(
        [&](unsigned c) { lifted |= PointSet(n_, class_members_[c - n_]); });
    rep.s52_generators.push_back(lifted);
  }
  auto b = generated_subalgebra(tf_, gens, {Op::kDia, Op::kEx});
  auto b_prime = generated_subalgebra(f_, rep.s52_generators, {Op::kEx1, Op::kEx2});
  rep.l_kernel = b.kernel;
  rep.k_kernel = b_prime.kernel;
  rep.k_hat = lift_partition(f_, rep.k_kernel);
  rep.k_hat_within_l = rep.k_hat.finer_than(rep.l_kernel);
  rep.b_atoms = b.atom_count;
  rep.b_prime_atoms = b_prime.atom_count;
  rep.k_hat_blocks = rep.k_hat.block_count();
  return rep;
}

TransferReport subalgebra_transfer(const S52Frame &f, const std::vector<PointSet> &gens) {
  return TransferContext(f).check(gens);
}

}  // namespace ms4wb
