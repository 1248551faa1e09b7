//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ms4wb/algebra.hpp"

#include <algorithm>
#include <string>

#include "ms4wb/error.hpp"
#include "refine.hpp"

namespace ms4wb {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::kDia: return "dia";
    case Op::kEx: return "ex";
    case Op::kBlackDia: return "blackdia";
    case Op::kEx1: return "ex1";
    case Op::kEx2: return "ex2";
  }
  return "?";
}

Op parse_op(std::string_view text) {
  if (text == "dia" || text == "<>") return Op::kDia;
  if (text == "ex" || text == "E") return Op::kEx;
  if (text == "blackdia" || text == "#<>") return Op::kBlackDia;
  if (text == "ex1" || text == "<1>") return Op::kEx1;
  if (text == "ex2" || text == "<2>") return Op::kEx2;
  throw InputError("unknown operator '" + std::string(text) + "'");
}

std::string_view signature_name(AlgebraSignature s) {
  switch (s) {
    case AlgebraSignature::kMs4: return "ms4";
    case AlgebraSignature::kS52: return "s52";
    case AlgebraSignature::kMs4PrimedDia: return "ms4_with_primed_dia";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// FiniteAlgebra

FiniteAlgebra::FiniteAlgebra(unsigned width, std::vector<PointSet> carrier,
                             std::map<Op, OpFn> ops, AlgebraSignature sig)
    : width_(width), sig_(sig), carrier_(std::move(carrier)), fns_(std::move(ops)) {
  std::sort(carrier_.begin(), carrier_.end());
  carrier_.erase(std::unique(carrier_.begin(), carrier_.end()), carrier_.end());
  index_.reserve(carrier_.size());
  for (unsigned i = 0; i < carrier_.size(); ++i) {
    if (carrier_[i].width() != width_)
      throw InputError("carrier element has the wrong width");
    index_.emplace(carrier_[i].bits(), i);
  }
  if (!contains(PointSet::empty(width_)) || !contains(PointSet::full(width_)))
    throw InvariantError("carrier lacks the bottom or top element");
  for (const auto &a : carrier_)
    if (!contains(a.complement()))
      throw InvariantError("carrier is not closed under complement");
  if (carrier_.size() <= 1024)
    for (const auto &a : carrier_)
      for (const auto &b : carrier_)
        if (!contains(a & b))
          throw InvariantError("carrier is not closed under intersection");
  for (const auto &[op, fn] : fns_) {
    auto &table = tables_[op];
    table.reserve(carrier_.size());
    for (const auto &a : carrier_) {
      auto idx = index_of(fn(a));
      if (!idx)
        throw InvariantError("carrier is not closed under " + std::string(op_name(op)));
      table.push_back(*idx);
    }
  }
}

FiniteAlgebra FiniteAlgebra::lazy(unsigned width, std::map<Op, OpFn> ops,
                                  AlgebraSignature sig) {
  FiniteAlgebra a;
  a.width_ = width;
  a.lazy_ = true;
  a.sig_ = sig;
  a.fns_ = std::move(ops);
  return a;
}

std::uint64_t FiniteAlgebra::size() const {
  if (!lazy_) return carrier_.size();
  return width_ >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << width_);
}

std::optional<unsigned> FiniteAlgebra::index_of(const PointSet &a) const {
  if (lazy_ || a.width() != width_) return std::nullopt;
  auto it = index_.find(a.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteAlgebra::contains(const PointSet &a) const {
  if (a.width() != width_) return false;
  return lazy_ || index_.count(a.bits()) > 0;
}

std::vector<Op> FiniteAlgebra::operators() const {
  std::vector<Op> ops;
  for (const auto &[op, fn] : fns_) ops.push_back(op);
  return ops;
}

PointSet FiniteAlgebra::apply(Op op, const PointSet &a) const {
  auto fn = fns_.find(op);
  if (fn == fns_.end())
    throw InputError("operator " + std::string(op_name(op)) +
                     " is not part of this algebra");
  if (!lazy_) {
    if (auto idx = index_of(a)) return carrier_[tables_.at(op)[*idx]];
  }
  return fn->second(a);
}

std::vector<PointSet> FiniteAlgebra::atoms() const {
  std::vector<PointSet> out;
  if (lazy_) {
    for (unsigned x = 0; x < width_; ++x) out.push_back(PointSet::singleton(width_, x));
    return out;
  }
  Partition k = Partition::kernel(width_, carrier_);
  for (const auto &b : k.blocks()) {
    if (!contains(b)) throw InvariantError("carrier is not atomic");
    out.push_back(b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Powerset and fixpoint algebras

namespace {

std::vector<PointSet> all_subsets(unsigned n) {
  std::vector<PointSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) out.emplace_back(n, s);
  return out;
}

FiniteAlgebra make_powerset(unsigned n, std::map<Op, FiniteAlgebra::OpFn> ops,
                            AlgebraSignature sig, bool allow_lazy) {
  if (n > kPowersetCap) {
    if (!allow_lazy)
      throw BudgetError("powerset algebra of " + std::to_string(n) +
                        " points exceeds the materialization cap of " +
                        std::to_string(kPowersetCap) + "; use lazy mode");
    return FiniteAlgebra::lazy(n, std::move(ops), sig);
  }
  return FiniteAlgebra(n, all_subsets(n), std::move(ops), sig);
}

}  // namespace

FiniteAlgebra powerset_algebra(const Frame &f, bool allow_lazy) {
  std::map<Op, FiniteAlgebra::OpFn> ops{
      {Op::kDia, [f](const PointSet &a) { return f.dia(a); }},
      {Op::kEx, [f](const PointSet &a) { return f.ex(a); }},
  };
  return make_powerset(f.size(), std::move(ops), AlgebraSignature::kMs4, allow_lazy);
}

FiniteAlgebra powerset_algebra(const S52Frame &f, bool allow_lazy) {
  std::map<Op, FiniteAlgebra::OpFn> ops{
      {Op::kEx1, [f](const PointSet &a) { return f.ex1(a); }},
      {Op::kEx2, [f](const PointSet &a) { return f.ex2(a); }},
  };
  return make_powerset(f.size(), std::move(ops), AlgebraSignature::kS52, allow_lazy);
}

std::vector<PointSet> upsets(const Relation &quasi_order) {
  const unsigned n = quasi_order.size();
  std::vector<PointSet> out;
  PointSet in(n), out_set(n);
  std::function<void(unsigned)> go = [&](unsigned x) {
    while (x < n && (in.contains(x) || out_set.contains(x))) ++x;
    if (x == n) {
      out.push_back(in);
      return;
    }
    PointSet saved_in = in, saved_out = out_set;
    in |= quasi_order.image(x);
    go(x + 1);
    in = saved_in;
    out_set |= quasi_order.preimage(x);
    go(x + 1);
    out_set = saved_out;
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

FixpointAlgebra fixpoint_algebra(const Frame &f, FixpointKind kind) {
  FixpointAlgebra result{kind, {}, {}};
  switch (kind) {
    case FixpointKind::kExists: {
      if (f.e().block_count() > kPowersetCap)
        throw BudgetError("too many E-classes to list the E-saturated sets");
      result.elements = unions_of_blocks(f.e());
      return result;
    }
    case FixpointKind::kBox:
      result.elements = upsets(f.r());
      break;
    case FixpointKind::kBlackBox:
      result.elements = upsets(q_relation(f));
      break;
  }
  if (result.elements.size() > 1024) return result;
  std::unordered_map<std::uint64_t, unsigned> index;
  for (unsigned i = 0; i < result.elements.size(); ++i)
    index.emplace(result.elements[i].bits(), i);
  for (const auto &a : result.elements) {
    std::vector<unsigned> row;
    for (const auto &b : result.elements) {
      PointSet u = a.complement() | b;
      PointSet imp = kind == FixpointKind::kBox ? f.box(u) : f.black_box(u);
      auto it = index.find(imp.bits());
      if (it == index.end())
        throw InvariantError("fixpoint set is not closed under implication");
      row.push_back(it->second);
    }
    result.implication.push_back(std::move(row));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Generated subalgebras

std::vector<Relation> operator_relations(const Frame &f, const OperatorSet &ops) {
  std::vector<Relation> rels;
  for (Op op : ops) {
    switch (op) {
      case Op::kDia: rels.push_back(f.r()); break;
      case Op::kEx: rels.push_back(f.e_relation()); break;
      case Op::kBlackDia: rels.push_back(q_relation(f)); break;
      default:
        throw InputError("operator " + std::string(op_name(op)) +
                         " is not available on an MS4-frame");
    }
  }
  return rels;
}

std::vector<Relation> operator_relations(const S52Frame &f, const OperatorSet &ops) {
  std::vector<Relation> rels;
  for (Op op : ops) {
    switch (op) {
      case Op::kEx1: rels.push_back(f.e1_relation()); break;
      case Op::kEx2: rels.push_back(f.e2_relation()); break;
      default:
        throw InputError("operator " + std::string(op_name(op)) +
                         " is not available on an S5_2-frame");
    }
  }
  return rels;
}

Partition refine_kernel(unsigned n, std::span<const PointSet> gens,
                        std::span<const Relation> relations, unsigned *passes) {
  if (n == 0) return Partition::identity(0);
  std::vector<std::vector<std::uint64_t>> cols(relations.size());
  std::vector<const std::vector<std::uint64_t> *> ops;
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (relations[r].size() != n) throw InputError("relation has the wrong size");
    for (unsigned x = 0; x < n; ++x) cols[r].push_back(relations[r].preimage(x).bits());
    ops.push_back(&cols[r]);
  }
  detail::MaskRefiner refiner(PointSet::mask(n));
  for (const auto &g : gens) {
    if (g.width() != n) throw InputError("generator has the wrong width");
    refiner.split(g.bits());
  }
  unsigned steps = refiner.stabilize(ops.data(), static_cast<unsigned>(ops.size()));
  if (passes) *passes = steps;
  std::vector<PointSet> blocks;
  for (unsigned i = 0; i < refiner.count(); ++i) blocks.emplace_back(n, refiner.block(i));
  return Partition::from_blocks(n, blocks);
}

std::vector<PointSet> unions_of_blocks(const Partition &k) {
  const unsigned m = k.block_count();
  if (m > kMaterializeAtoms)
    throw BudgetError("refusing to list 2^" + std::to_string(m) + " sets");
  std::vector<PointSet> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    PointSet u(k.size());
    for (unsigned b = 0; b < m; ++b)
      if ((s >> b) & 1U) u |= k.blocks()[b];
    out.push_back(u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

SubalgebraReport report_for(unsigned n, const std::vector<PointSet> &gens,
                            const std::vector<Relation> &rels) {
  SubalgebraReport rep;
  rep.generators = gens;
  rep.kernel = refine_kernel(n, gens, rels, &rep.closure_steps);
  rep.atom_count = rep.kernel.block_count();
  rep.size = rep.atom_count < 64 ? (std::uint64_t{1} << rep.atom_count) : 0;
  rep.materialized = rep.atom_count <= kMaterializeAtoms;
  if (rep.materialized) rep.elements = unions_of_blocks(rep.kernel);
  rep.kernel_correct = true;
  for (const auto &r : rels)
    if (correctness_witness(r, rep.kernel)) rep.kernel_correct = false;
  if (!rep.kernel_correct)
    throw InvariantError("kernel of a generated subalgebra is not correct");
  return rep;
}

}  // namespace

SubalgebraReport generated_subalgebra(const Frame &f, const std::vector<PointSet> &gens,
                                      const OperatorSet &ops) {
  return report_for(f.size(), gens, operator_relations(f, ops));
}

SubalgebraReport generated_subalgebra(const S52Frame &f,
                                      const std::vector<PointSet> &gens,
                                      const OperatorSet &ops) {
  return report_for(f.size(), gens, operator_relations(f, ops));
}

// ---------------------------------------------------------------------------
// Coloring theorem

void for_each_refinement(const Partition &coarse,
                         const std::function<void(const Partition &)> &fn) {
  const unsigned n = coarse.size();
  std::vector<unsigned> label(n, 0);
  // Labels in use inside each coarse block, as a list of label ids.
  std::vector<std::vector<unsigned>> used(coarse.block_count());
  unsigned next_label = 0;
  std::function<void(unsigned)> go = [&](unsigned x) {
    if (x == n) {
      fn(Partition::from_labels(label));
      return;
    }
    auto &mine = used[coarse.block_index(x)];
    for (std::size_t i = 0; i < mine.size(); ++i) {
      label[x] = mine[i];
      go(x + 1);
    }
    label[x] = next_label++;
    mine.push_back(label[x]);
    go(x + 1);
    mine.pop_back();
    --next_label;
  };
  go(0);
}

namespace {

GeneratingVerdict generating_with(unsigned n, const std::vector<PointSet> &gens,
                                  const std::vector<Relation> &rels) {
  GeneratingVerdict v;
  v.coloring = Partition::kernel(n, gens);
  v.kernel = refine_kernel(n, gens, rels);
  v.generating = v.kernel.is_identity();
  if (n > kMethodBCap) {
    v.method_b_skipped = true;
    return v;
  }
  Partition best = Partition::identity(n);
  for_each_refinement(v.coloring, [&](const Partition &k) {
    ++v.partitions_examined;
    for (const auto &r : rels)
      if (correctness_witness(r, k)) return;
    best = best.join(k);
  });
  v.method_b = best;
  v.methods_agree = best == v.kernel;
  return v;
}

}  // namespace

GeneratingVerdict is_generating(const Frame &f, const std::vector<PointSet> &gens) {
  return generating_with(f.size(), gens, operator_relations(f, {Op::kDia, Op::kEx}));
}

GeneratingVerdict is_generating(const S52Frame &f, const std::vector<PointSet> &gens) {
  return generating_with(f.size(), gens, operator_relations(f, {Op::kEx1, Op::kEx2}));
}

// ---------------------------------------------------------------------------
// Congruences

std::uint64_t count_filters(const std::vector<PointSet> &lattice) {
  std::vector<PointSet> order = lattice;
  std::sort(order.begin(), order.end(), [](const PointSet &a, const PointSet &b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a < b;
  });
  const std::size_t m = order.size();
  std::unordered_map<std::uint64_t, std::size_t> pos;
  for (std::size_t i = 0; i < m; ++i) pos.emplace(order[i].bits(), i);

  enum : signed char { kUndecided = 0, kIn = 1, kOut = -1 };
  std::vector<signed char> state(m, kUndecided);
  std::vector<std::size_t> trail;
  std::vector<std::size_t> included;
  std::uint64_t count = 0;

  auto undo_to = [&](std::size_t mark, std::size_t inc_mark) {
    while (trail.size() > mark) {
      state[trail.back()] = kUndecided;
      trail.pop_back();
    }
    included.resize(inc_mark);
  };
  // Include i and close under meets with everything included.
  auto include = [&](std::size_t i) -> bool {
    std::vector<std::size_t> work{i};
    while (!work.empty()) {
      std::size_t a = work.back();
      work.pop_back();
      if (state[a] == kIn) continue;
      if (state[a] == kOut) return false;
      state[a] = kIn;
      trail.push_back(a);
      included.push_back(a);
      for (std::size_t b : included) {
        auto it = pos.find((order[a] & order[b]).bits());
        if (it == pos.end()) throw InputError("family is not closed under intersection");
        if (state[it->second] != kIn) work.push_back(it->second);
      }
    }
    return true;
  };
  // Exclude i and everything below it.
  auto exclude = [&](std::size_t i) -> bool {
    for (std::size_t j = i; j < m; ++j) {
      if (!order[j].subset_of(order[i])) continue;
      if (state[j] == kIn) return false;
      if (state[j] == kUndecided) {
        state[j] = kOut;
        trail.push_back(j);
      }
    }
    return true;
  };

  std::function<void(std::size_t)> go = [&](std::size_t i) {
    while (i < m && state[i] != kUndecided) ++i;
    if (i == m) {
      if (!included.empty()) ++count;
      return;
    }
    const std::size_t mark = trail.size(), inc = included.size();
    if (include(i)) go(i + 1);
    undo_to(mark, inc);
    if (exclude(i)) go(i + 1);
    undo_to(mark, inc);
  };
  go(0);
  return count;
}

CongruenceReport congruences(const Frame &f) {
  if (f.size() > kCongruenceCap)
    throw BudgetError("congruence enumeration is capped at " +
                      std::to_string(kCongruenceCap) + " points");
  CongruenceReport rep;
  rep.q_upsets = upsets(q_relation(f));
  const Partition &e = f.e();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << e.block_count()); ++s) {
    PointSet u(f.size());
    for (unsigned b = 0; b < e.block_count(); ++b)
      if ((s >> b) & 1U) u |= e.blocks()[b];
    if (f.r().image(u).subset_of(u)) rep.esat_r_upsets.push_back(u);
  }
  std::sort(rep.esat_r_upsets.begin(), rep.esat_r_upsets.end());
  rep.h_black_filter_count = count_filters(rep.q_upsets);
  rep.sets_agree = rep.q_upsets == rep.esat_r_upsets;
  rep.count_agrees = rep.h_black_filter_count == rep.q_upsets.size() &&
                     rep.esat_r_upsets.size() == rep.q_upsets.size();
  rep.simple = rep.q_upsets.size() == 2;
  PointSet proper_union = f.none();
  for (const auto &u : rep.q_upsets)
    if (!u.is_full()) proper_union |= u;
  rep.si = !proper_union.is_full();
  return rep;
}

// ---------------------------------------------------------------------------
// Duality

Frame atom_frame(const FiniteAlgebra &a, const std::vector<std::string> *names) {
  if (!a.has(Op::kDia) || !a.has(Op::kEx))
    throw InputError("atom_frame needs an algebra with a diamond and Ex");
  const auto atoms = a.atoms();
  const auto m = static_cast<unsigned>(atoms.size());
  Relation r(m), e(m);
  std::vector<std::string> atom_names;
  for (unsigned x = 0; x < m; ++x) {
    if (names && names->size() == a.width())
      atom_names.push_back((*names)[*atoms[x].first()]);
    else
      atom_names.push_back("a" + std::to_string(x));
    for (unsigned y = 0; y < m; ++y) {
      if (atoms[x].subset_of(a.dia(atoms[y]))) r.insert(x, y);
      if (atoms[x].subset_of(a.ex(atoms[y]))) e.insert(x, y);
    }
  }
  try {
    return Frame::from_parts(std::move(atom_names), std::move(r),
                             Partition::from_equivalence(e));
  } catch (const InputError &err) {
    throw InvariantError(std::string("atom structure is not an MS4-frame: ") + err.what());
  }
}

bool algebras_isomorphic(const FiniteAlgebra &a, const FiniteAlgebra &b) {
  if (a.is_lazy() || b.is_lazy()) throw InputError("algebras must be materialized");
  if (a.size() != b.size()) return false;
  auto s52_atoms = [](const FiniteAlgebra &x) -> std::optional<S52Frame> {
    if (!x.has(Op::kEx1) || !x.has(Op::kEx2)) return std::nullopt;
    const auto atoms = x.atoms();
    const auto m = static_cast<unsigned>(atoms.size());
    Relation e1(m), e2(m);
    std::vector<std::string> names;
    for (unsigned i = 0; i < m; ++i) {
      names.push_back("a" + std::to_string(i));
      for (unsigned j = 0; j < m; ++j) {
        if (atoms[i].subset_of(x.ex1(atoms[j]))) e1.insert(i, j);
        if (atoms[i].subset_of(x.ex2(atoms[j]))) e2.insert(i, j);
      }
    }
    try {
      return S52Frame::from_parts(std::move(names), Partition::from_equivalence(e1),
                                  Partition::from_equivalence(e2));
    } catch (const InputError &err) {
      throw InvariantError(std::string("atom structure is not an S5_2-frame: ") + err.what());
    }
  };
  auto fa = s52_atoms(a), fb = s52_atoms(b);
  if (fa || fb) {
    if (!fa || !fb) return false;
    return find_isomorphism(*fa, *fb, kPowersetCap).has_value();
  }
  return find_isomorphism(atom_frame(a), atom_frame(b), kPowersetCap).has_value();
}

namespace {

void check_closure_operator(const FiniteAlgebra &a, Op op, std::string_view label,
                            std::vector<IdentityFailure> &out) {
  const std::string name(label);
  const unsigned w = a.width();
  if (!a.apply(op, PointSet::empty(w)).is_empty())
    out.push_back({name + " 0 = 0", PointSet::empty(w), PointSet::empty(w)});
  const auto atoms = a.atoms();
  for (const auto &x : a.carrier()) {
    PointSet img = a.apply(op, x);
    if (!x.subset_of(img)) out.push_back({"a <= " + name + " a", x, img});
    if (!a.apply(op, img).subset_of(img))
      out.push_back({name + " " + name + " a <= " + name + " a", x, img});
    // Join preservation over all pairs is equivalent, on a finite Boolean
    // algebra, to every element's image being the union of its atoms' images.
    PointSet joined(w);
    for (const auto &at : atoms)
      if (at.subset_of(x)) joined |= a.apply(op, at);
    if (joined != img)
      out.push_back({name + " (a v b) = " + name + " a v " + name + " b", x, joined});
  }
}

}  // namespace

std::vector<IdentityFailure> check_ms4_identities(const FiniteAlgebra &a) {
  if (a.is_lazy()) throw BudgetError("identity sweeps need a materialized algebra");
  std::vector<IdentityFailure> out;
  check_closure_operator(a, Op::kDia, "Dia", out);
  check_closure_operator(a, Op::kEx, "Ex", out);
  for (const auto &x : a.carrier()) {
    PointSet all_x = a.ex(x.complement()).complement();
    if (!a.ex(all_x).subset_of(all_x)) out.push_back({"Ex A a <= A a", x, all_x});
    if (!a.ex(a.dia(x)).subset_of(a.dia(a.ex(x))))
      out.push_back({"Ex Dia a <= Dia Ex a", x, a.ex(a.dia(x))});
  }
  return out;
}

std::vector<IdentityFailure> check_ms4s_identities(const FiniteAlgebra &a) {
  if (a.is_lazy()) throw BudgetError("identity sweeps need a materialized algebra");
  std::vector<IdentityFailure> out;
  auto box = [&](const PointSet &x) { return a.dia(x.complement()).complement(); };
  auto all = [&](const PointSet &x) { return a.ex(x.complement()).complement(); };
  for (const auto &x : a.carrier()) {
    PointSet de = a.dia(a.ex(x));
    if (a.ex(de) != de) out.push_back({"Ex Dia Ex a = Dia Ex a", x, de});
    PointSet bb = box(all(x));
    PointSet lhs = a.dia(a.ex(bb));
    if (!lhs.subset_of(bb)) out.push_back({"BlackDia BlackBox a <= BlackBox a", x, lhs});
  }
  return out;
}

std::vector<IdentityFailure> check_equivalent_forms(const Frame &f) {
  if (f.size() > kPowersetCap)
    throw BudgetError("the powerset sweep is capped at " + std::to_string(kPowersetCap) +
                      " points");
  std::vector<IdentityFailure> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << f.size()); ++s) {
    PointSet a(f.size(), s);
    PointSet l1 = f.ex(f.dia(f.ex(a))), r1 = f.dia(f.ex(a));
    if (l1 != r1) out.push_back({"Ex Dia Ex a = Dia Ex a", a, l1});
    PointSet l2 = f.all(f.box(f.all(a))), r2 = f.box(f.all(a));
    if (l2 != r2) out.push_back({"A Box A a = Box A a", a, l2});
    PointSet l3 = f.ex(f.box(a)), r3 = f.box(f.ex(a));
    if (!l3.subset_of(r3)) out.push_back({"Ex Box a <= Box Ex a", a, l3});
    PointSet l4 = f.dia(f.all(f.dia(a))), r4 = f.all(f.dia(a));
    if (l4 != r4) out.push_back({"Dia A Dia a = A Dia a", a, l4});
  }
  return out;
}

// ---------------------------------------------------------------------------
// The finite model property construction

FmpResult fmp_restrict(const Frame &f, const std::vector<PointSet> &s) {
  if (!q_relation(f).is_symmetric())
    throw PreconditionError("frame does not validate ms4s (Q is not symmetric)");
  FmpResult res;
  res.b_prime = generated_subalgebra(f, s, {Op::kBlackDia, Op::kEx});
  if (!res.b_prime.materialized)
    throw BudgetError("B' has 2^" + std::to_string(res.b_prime.atom_count) +
                      " elements, above the materialization cap");
  const auto &carrier = res.b_prime.elements;
  for (const auto &x : carrier)
    if (f.dia(x) == x) res.dia_fixpoints.push_back(x);
  auto fix = res.dia_fixpoints;
  auto dia_primed = [fix, n = f.size()](const PointSet &a) {
    PointSet meet = PointSet::full(n);
    for (const auto &x : fix)
      if (a.subset_of(x)) meet &= x;
    return meet;
  };
  std::map<Op, FiniteAlgebra::OpFn> ops{
      {Op::kDia, dia_primed},
      {Op::kEx, [f](const PointSet &a) { return f.ex(a); }},
  };
  res.algebra = FiniteAlgebra(f.size(), carrier, std::move(ops),
                              AlgebraSignature::kMs4PrimedDia);
  res.failures = check_ms4_identities(res.algebra);
  auto more = check_ms4s_identities(res.algebra);
  res.failures.insert(res.failures.end(), more.begin(), more.end());
  for (const auto &a : carrier) {
    PointSet d = f.dia(a);
    if (res.algebra.contains(d) && res.algebra.dia(a) != d) {
      res.agreement_holds = false;
      res.failures.push_back({"Dia a in B' implies Dia' a = Dia a", a, res.algebra.dia(a)});
    }
    PointSet bd = f.black_dia(a);
    if (f.ex(bd) != bd || f.black_dia(f.ex(a)) != bd) {
      res.reduct_holds = false;
      res.failures.push_back({"Ex BlackDia a = BlackDia a = BlackDia Ex a", a, bd});
    }
  }
  return res;
}

TransferResult falsification_transfer(const Frame &f, const Formula &phi,
                                      const Valuation &v) {
  const auto c = compile(phi);
  TransferResult res;
  res.frame_values = eval_subterms(f, c, v);
  if (res.frame_values.back().is_full())
    throw PreconditionError("the formula is true everywhere under this valuation");
  FmpResult fmp = fmp_restrict(f, res.frame_values);
  std::vector<PointSet> vars;
  for (const auto &name : c.variables) vars.push_back(v.at(name));
  evaluate_steps(c, fmp.algebra, vars.data(), res.algebra_values);
  res.values_identical = res.algebra_values == res.frame_values;
  res.still_falsified = !res.algebra_values.back().is_full();
  res.identities_hold = fmp.failures.empty() && fmp.agreement_holds && fmp.reduct_holds;
  res.algebra_size = fmp.algebra.size();
  for (const auto &t : c.terms) res.subterms.push_back(to_string(t));
  return res;
}

}  // namespace ms4wb
