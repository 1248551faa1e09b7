//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_S52_HPP_
#define MS4WB_S52_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ms4wb/frame.hpp"
#include "ms4wb/partition.hpp"
#include "ms4wb/point_set.hpp"
#include "ms4wb/relation.hpp"

namespace ms4wb {

class FiniteAlgebra;

/// A finite S5_2-frame: two equivalence relations on one point set.
class S52Frame {
 public:
  S52Frame() = default;

  // Blocks must partition the points exactly; throws FrameError otherwise.
  static S52Frame build(const std::vector<std::string> &points,
                        const std::vector<std::vector<std::string>> &e1_blocks,
                        const std::vector<std::vector<std::string>> &e2_blocks);
  static S52Frame from_parts(std::vector<std::string> names, Partition e1,
                             Partition e2);

  unsigned size() const { return static_cast<unsigned>(names_.size()); }
  const std::vector<std::string> &names() const { return names_; }
  const std::string &name(unsigned i) const { return names_[i]; }
  std::optional<unsigned> index_of(std::string_view name) const;
  unsigned require_index(std::string_view name) const;
  PointSet set_of(const std::vector<std::string> &names) const;

  const Partition &e1() const { return e1_; }
  const Partition &e2() const { return e2_; }
  const Relation &e1_relation() const { return e1_rel_; }
  const Relation &e2_relation() const { return e2_rel_; }

  PointSet full() const { return PointSet::full(size()); }
  PointSet ex1(const PointSet &u) const { return e1_.saturate(u); }
  PointSet ex2(const PointSet &u) const { return e2_.saturate(u); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, unsigned> index_;
  Partition e1_, e2_;
  Relation e1_rel_, e2_rel_;
};

struct S52Analysis {
  Relation s_relation;  // E1 u E2
  Relation s_star;
  PointSet roots;
  bool is_si = false;
  bool is_simple = false;
  unsigned transitivity_degree = 0;  // least n with S^{n+1} = S^n, S^0 = Id
};

S52Analysis analyze_s52(const S52Frame &f);

// K is correct iff E1 K <= K E1 and E2 K <= K E2.
CorrectnessVerdict is_correct_partition(const S52Frame &f, const Partition &k);

// Throws PreconditionError when K is not correct.
S52Frame quotient(const S52Frame &f, const Partition &k);

/// The frame T(F): X followed by one class point "[c]" per E2-class (c the
/// least member's name), E = E2-classes with their class point, R = E1 on X
/// plus everything into the class points. Layers: class points 1, X 2.
/// The postconditions (MS4-frame, ms4s, depth <= 2, layers, Q total) are
/// verified on every call; a failure throws InvariantError.
std::optional<PointMap> find_isomorphism(const S52Frame &f, const S52Frame &g,
                                         unsigned cap = kDefaultIsomorphismCap);

Frame translate(const S52Frame &f);

// Index of the class point of E2-block b in translate(f).
inline unsigned class_point(const S52Frame &f, unsigned block) {
  return f.size() + block;
}

/// K-hat on T(F): K on X, and class points identified iff their classes have
/// the same K-saturation. Throws PreconditionError unless K is correct on F.
Partition lift_partition(const S52Frame &f, const Partition &k);

struct Relativization {
  unsigned layer = 0;
  std::vector<unsigned> points;  // indices in the layered frame, ascending
  // Relative operators on subsets of the layer, re-indexed to 0..|D|-1:
  // dia(a) = Dia a n D, ex(a) = Ex a n D.
  Relation dia_relation;
  Partition ex_partition;
  // Set when the relative operators on D2 were compared with E1/E2 of an
  // S5_2-frame.
  std::optional<bool> matches_s52;
};

// Throws InputError when the frame carries no layer tag or the layer is
// empty.
Relativization relativize(const Frame &layered, unsigned layer);
// Relativization to an arbitrary subset.
Relativization relativize_to(const Frame &f, const PointSet &d);
// relativize(translate(f), layer); for layer 2 also checks the relative
// operators against E1 and E2 of f.
Relativization relativize(const S52Frame &f, unsigned layer);

FiniteAlgebra relativized_algebra(const Relativization &r);

struct TransferReport {
  std::vector<PointSet> generators;    // over T(F)
  std::vector<PointSet> s52_generators;  // over F
  Partition l_kernel;      // kernel of <gens> in T(F)*
  Partition k_kernel;      // kernel of the corresponding subalgebra of F*
  Partition k_hat;
  bool k_hat_within_l = false;
  unsigned b_atoms = 0;        // |B| = 2^b_atoms
  unsigned b_prime_atoms = 0;  // |B'| = 2^b_prime_atoms
  unsigned k_hat_blocks = 0;   // |B| <= 2^k_hat_blocks
};

/// Reusable state for many transfer checks on one frame.
class TransferContext {
 public:
  explicit TransferContext(const S52Frame &f);

  const S52Frame &frame() const { return f_; }
  const Frame &translated() const { return tf_; }

  TransferReport check(const std::vector<PointSet> &gens) const;

  // Allocation-light variant: true iff K-hat <= L for the given generators
  // (bit masks over T(F)).
  bool k_hat_within_l(const std::uint64_t *gens, unsigned count) const;

 private:
  S52Frame f_;
  Frame tf_;
  unsigned n_ = 0;
  unsigned classes_ = 0;
  std::uint64_t d1_ = 0, d2_ = 0;
  std::vector<std::uint64_t> tf_dia_, tf_ex_;  // preimage columns
  std::vector<std::uint64_t> e1_, e2_;         // class of each point of F
  std::vector<std::uint64_t> class_members_;   // X-part of each E2-class
  std::vector<unsigned> class_of_;             // E2-block index per point
};

TransferReport subalgebra_transfer(const S52Frame &f,
                                   const std::vector<PointSet> &gens);

}  // namespace ms4wb

#endif  // MS4WB_S52_HPP_
