//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_ALGEBRA_HPP_
#define MS4WB_ALGEBRA_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ms4wb/formula.hpp"
#include "ms4wb/frame.hpp"
#include "ms4wb/partition.hpp"
#include "ms4wb/point_set.hpp"
#include "ms4wb/s52.hpp"

namespace ms4wb {

enum class Op { kDia, kEx, kBlackDia, kEx1, kEx2 };

std::string_view op_name(Op op);
// Accepts "dia", "ex", "blackdia", "ex1", "ex2" and the formula prefixes
// "<>", "E", "#<>", "<1>", "<2>".
Op parse_op(std::string_view text);

using OperatorSet = std::vector<Op>;

enum class AlgebraSignature { kMs4, kS52, kMs4PrimedDia };

std::string_view signature_name(AlgebraSignature s);

/// A finite modal algebra of sets over a fixed point set. Materialized
/// algebras hold a sorted carrier and operator tables; lazy ones (powerset
/// algebras above the materialization cap) compute operators on demand and
/// treat every subset as a member.
class FiniteAlgebra {
 public:
  using OpFn = std::function<PointSet(const PointSet &)>;

  FiniteAlgebra() = default;
  // Builds tables by applying `ops` to every carrier element. The carrier is
  // sorted and deduplicated; closure is verified (InvariantError).
  FiniteAlgebra(unsigned width, std::vector<PointSet> carrier,
                std::map<Op, OpFn> ops, AlgebraSignature sig);
  static FiniteAlgebra lazy(unsigned width, std::map<Op, OpFn> ops,
                            AlgebraSignature sig);

  unsigned width() const { return width_; }
  bool is_lazy() const { return lazy_; }
  AlgebraSignature signature() const { return sig_; }
  // Number of elements; for lazy algebras 2^width (saturating at 2^63).
  std::uint64_t size() const;
  const std::vector<PointSet> &carrier() const { return carrier_; }
  std::optional<unsigned> index_of(const PointSet &a) const;
  bool contains(const PointSet &a) const;
  bool has(Op op) const { return fns_.count(op) > 0; }
  std::vector<Op> operators() const;

  PointSet apply(Op op, const PointSet &a) const;
  // Index-level table (materialized algebras only).
  const std::vector<unsigned> &table(Op op) const { return tables_.at(op); }

  // Minimal nonzero elements of the carrier.
  std::vector<PointSet> atoms() const;

  // Formula semantics: Dia is the algebra's diamond (the primed one for
  // kMs4PrimedDia).
  PointSet dia(const PointSet &a) const { return apply(Op::kDia, a); }
  PointSet ex(const PointSet &a) const { return apply(Op::kEx, a); }
  PointSet ex1(const PointSet &a) const { return apply(Op::kEx1, a); }
  PointSet ex2(const PointSet &a) const { return apply(Op::kEx2, a); }

 private:
  unsigned width_ = 0;
  bool lazy_ = false;
  AlgebraSignature sig_ = AlgebraSignature::kMs4;
  std::vector<PointSet> carrier_;
  std::unordered_map<std::uint64_t, unsigned> index_;
  std::map<Op, OpFn> fns_;
  std::map<Op, std::vector<unsigned>> tables_;
};

inline constexpr unsigned kPowersetCap = 20;

// The dual algebra F*. Materialized up to kPowersetCap points; beyond that
// lazy when allowed, BudgetError otherwise.
FiniteAlgebra powerset_algebra(const Frame &f, bool allow_lazy = false);
FiniteAlgebra powerset_algebra(const S52Frame &f, bool allow_lazy = false);

enum class FixpointKind { kExists, kBox, kBlackBox };

struct FixpointAlgebra {
  FixpointKind kind;
  std::vector<PointSet> elements;  // sorted
  // implication[i][j] = index of elements[i] -> elements[j] (Heyting, for
  // box and blackbox only).
  std::vector<std::vector<unsigned>> implication;
};

// kExists: E-saturated sets; kBox: R-upsets with a -> b = Box(-a u b);
// kBlackBox: Q-upsets with a -> b = BlackBox(-a u b). Enumerated by upset
// DFS, so the point cap is the upset count rather than 2^n.
FixpointAlgebra fixpoint_algebra(const Frame &f, FixpointKind kind);

/// The relations whose preimage maps are the operators in `ops`.
std::vector<Relation> operator_relations(const Frame &f, const OperatorSet &ops);
std::vector<Relation> operator_relations(const S52Frame &f, const OperatorSet &ops);

/// Atom partition of the subalgebra generated by `gens` under operators that
/// are preimage maps of the given relations: the coarsest partition finer
/// than the generators' kernel whose blocks have saturated operator images.
/// `passes` receives the number of refinement rounds.
Partition refine_kernel(unsigned n, std::span<const PointSet> gens,
                        std::span<const Relation> relations,
                        unsigned *passes = nullptr);

inline constexpr unsigned kMaterializeAtoms = 20;

struct SubalgebraReport {
  std::vector<PointSet> generators;
  Partition kernel;              // the atoms, as a partition
  unsigned atom_count = 0;
  std::uint64_t size = 0;        // 2^atom_count; 0 when atom_count >= 64
  bool materialized = false;     // elements listed (atom_count <= 20)
  std::vector<PointSet> elements;  // sorted
  unsigned closure_steps = 0;
  bool kernel_correct = false;   // kernel verified correct for every operator
};

// Throws InputError when an operator is not available on the frame kind.
SubalgebraReport generated_subalgebra(const Frame &f,
                                      const std::vector<PointSet> &gens,
                                      const OperatorSet &ops = {Op::kDia, Op::kEx});
SubalgebraReport generated_subalgebra(const S52Frame &f,
                                      const std::vector<PointSet> &gens,
                                      const OperatorSet &ops = {Op::kEx1, Op::kEx2});

// All unions of blocks of k, sorted. Requires at most 20 blocks.
std::vector<PointSet> unions_of_blocks(const Partition &k);

inline constexpr unsigned kMethodBCap = 8;

struct GeneratingVerdict {
  bool generating = false;
  Partition coloring;      // C: points with the same membership pattern
  Partition kernel;        // method A: kernel of the generated subalgebra
  std::optional<Partition> method_b;  // join of the correct partitions below C
  std::uint64_t partitions_examined = 0;
  bool method_b_skipped = false;  // above kMethodBCap points
  bool methods_agree = true;
};

/// Coloring-theorem test for the full signature of the frame.
GeneratingVerdict is_generating(const Frame &f, const std::vector<PointSet> &gens);
GeneratingVerdict is_generating(const S52Frame &f, const std::vector<PointSet> &gens);

// Partitions finer than `coarse`, in a fixed order; calls fn for each.
void for_each_refinement(const Partition &coarse,
                         const std::function<void(const Partition &)> &fn);

inline constexpr unsigned kCongruenceCap = 16;

struct CongruenceReport {
  std::vector<PointSet> q_upsets;       // sorted
  std::vector<PointSet> esat_r_upsets;  // sorted
  std::uint64_t h_black_filter_count = 0;
  bool sets_agree = false;
  bool count_agrees = false;
  // Finite restatements: exactly two congruences / a largest proper Q-upset.
  bool simple = false;
  bool si = false;
};

CongruenceReport congruences(const Frame &f);

// Upsets of a quasi-order by branching DFS, sorted.
std::vector<PointSet> upsets(const Relation &quasi_order);

// Nonempty, up-closed, intersection-closed subfamilies of a lattice of sets
// (closed under intersection and containing its top).
std::uint64_t count_filters(const std::vector<PointSet> &lattice);

/// The frame of atoms: x R y iff x <= Dia y, x E y iff x <= Ex y. Atoms are
/// named by `names` of their least point when given, else "a<i>". Throws
/// InvariantError when the result is not an MS4-frame.
Frame atom_frame(const FiniteAlgebra &a,
                 const std::vector<std::string> *names = nullptr);

// Isomorphism of two materialized algebras over the same signature, checked
// by the atom map their atoms induce. Used for the double-dual check.
bool algebras_isomorphic(const FiniteAlgebra &a, const FiniteAlgebra &b);

struct IdentityFailure {
  std::string identity;
  PointSet a;
  PointSet b;
};

// MS4-algebra identities on the materialized carrier: closure-operator
// identities for Dia and Ex, Ex Forall a <= Forall a, Ex Dia a <= Dia Ex a.
// Join preservation is checked through the atoms. BudgetError on lazy
// algebras.
std::vector<IdentityFailure> check_ms4_identities(const FiniteAlgebra &a);
// Ex Dia' Ex = Dia' Ex and BlackDia' BlackBox' a <= BlackBox' a.
std::vector<IdentityFailure> check_ms4s_identities(const FiniteAlgebra &a);

// The four equivalent forms of the commutation axiom, for every element of
// the powerset of f (<= 20 points).
std::vector<IdentityFailure> check_equivalent_forms(const Frame &f);

struct FmpResult {
  FiniteAlgebra algebra;   // (B', Dia', Ex), signature kMs4PrimedDia
  SubalgebraReport b_prime;
  std::vector<PointSet> dia_fixpoints;  // B' n Fix(Dia), sorted
  std::vector<IdentityFailure> failures;
  bool agreement_holds = true;  // Dia a in B' implies Dia' a = Dia a
  bool reduct_holds = true;     // Ex BlackDia = BlackDia = BlackDia Ex on B'
};

/// The finite MS4_S-algebra A_S. Throws PreconditionError when f does not
/// validate ms4s, BudgetError when B' has more than 2^20 elements.
FmpResult fmp_restrict(const Frame &f, const std::vector<PointSet> &s);

struct TransferResult {
  std::vector<PointSet> frame_values;    // per compiled subterm, in F*
  std::vector<PointSet> algebra_values;  // per compiled subterm, in A_S
  bool values_identical = false;
  bool still_falsified = false;
  bool identities_hold = false;
  std::uint64_t algebra_size = 0;
  std::vector<std::string> subterms;
};

/// Throws PreconditionError when phi is true everywhere under v or f fails
/// ms4s.
TransferResult falsification_transfer(const Frame &f, const Formula &phi,
                                      const Valuation &v);

}  // namespace ms4wb

#endif  // MS4WB_ALGEBRA_HPP_
