//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_FRAME_HPP_
#define MS4WB_FRAME_HPP_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ms4wb/partition.hpp"
#include "ms4wb/point_set.hpp"
#include "ms4wb/relation.hpp"

namespace ms4wb {

enum class ClosureMode {
  kClose,     // take the reflexive-transitive closure of R and the finest
              // equivalence containing the E-blocks
  kValidate,  // check the given R and E as they are
};

/// A finite MS4-frame (X, R, E): R a quasi-order, E an equivalence, and
/// RE <= ER, i.e. for all x E y R y' there is x R x' E y'.
///
/// Frames are immutable once built; every constructor path validates.
class Frame {
 public:
  using Layers = std::vector<unsigned>;

  Frame() = default;

  // Throws FrameError (or InputError for naming problems) on any violation.
  static Frame build(const std::vector<std::string> &points,
                     const std::vector<std::pair<std::string, std::string>> &r_edges,
                     const std::vector<std::vector<std::string>> &e_blocks,
                     ClosureMode mode = ClosureMode::kClose);

  // Validates R as a quasi-order and RE <= ER; `layers` (1-based, one entry
  // per point) is carried through unchanged.
  static Frame from_parts(std::vector<std::string> names, Relation r,
                          Partition e, std::optional<Layers> layers = {});

  unsigned size() const { return static_cast<unsigned>(names_.size()); }
  const std::vector<std::string> &names() const { return names_; }
  const std::string &name(unsigned i) const { return names_[i]; }
  std::optional<unsigned> index_of(std::string_view name) const;
  unsigned require_index(std::string_view name) const;

  const Relation &r() const { return r_; }
  const Partition &e() const { return e_; }
  const Relation &e_relation() const { return e_rel_; }
  const std::optional<Layers> &layer_tag() const { return layers_; }

  PointSet full() const { return PointSet::full(size()); }
  PointSet none() const { return PointSet::empty(size()); }
  PointSet set_of(const std::vector<std::string> &names) const;

  // Dual operators: Dia U = R^{-1}(U), Ex U = E(U).
  PointSet dia(const PointSet &u) const { return r_.preimage(u); }
  PointSet box(const PointSet &u) const { return dia(u.complement()).complement(); }
  PointSet ex(const PointSet &u) const { return e_.saturate(u); }
  PointSet all(const PointSet &u) const { return ex(u.complement()).complement(); }
  PointSet black_dia(const PointSet &u) const { return dia(ex(u)); }
  PointSet black_box(const PointSet &u) const { return box(all(u)); }

  Frame with_layers(Layers layers) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, unsigned> index_;
  Relation r_;
  Partition e_;
  Relation e_rel_;
  std::optional<Layers> layers_;
};

// First (x, y, y') with x E y R y' but no x R x' E y', or nullopt.
std::optional<std::array<unsigned, 3>> re_er_witness(const Relation &r,
                                                     const Partition &e);

/// Q = ER: x Q y iff x R z E y for some z.
Relation q_relation(const Frame &f);

struct FrameClassification {
  unsigned depth = 0;
  std::vector<PointSet> layers;  // layers[0] is D1, the quasi-maximal points
  PointSet q_roots;
  bool is_si = false;
  bool is_simple = false;
  // On finite frames every set is open, so "strongly Q-rooted" and "Q-rooted"
  // coincide. Recorded, not asserted for infinite frames.
  bool strongly_rooted_is_rooted = true;
};

FrameClassification classify(const Frame &f);

// Longest proper R-chain, via the cluster condensation.
unsigned depth(const Relation &quasi_order);

/// The S4-frame (X/E, R-bar) of E-classes; each class is named by its least
/// member and the result has E = identity.
Frame skeleton(const Frame &f);

struct CorrectnessVerdict {
  enum class Clause { kNone, kR, kE };

  bool correct = true;
  Clause failed = Clause::kNone;
  // x K y, y S y' and no x S x' K y' (S the failing relation).
  std::array<unsigned, 3> witness{};
  // Every partition of a finite discrete space is separated.
  bool separated_vacuous = true;
};

/// K is correct iff RK <= KR and EK <= KE.
CorrectnessVerdict is_correct_partition(const Frame &f, const Partition &k);

// Correctness of K with respect to a single relation.
std::optional<std::array<unsigned, 3>> correctness_witness(const Relation &s,
                                                           const Partition &k);

/// F/K with blocks named by their least member. Throws PreconditionError when
/// K is not correct.
Frame quotient(const Frame &f, const Partition &k);

// The canonical projection onto quotient(f, k): point -> block index.
std::vector<unsigned> quotient_map(const Partition &k);

using PointMap = std::vector<unsigned>;

struct MorphismVerdict {
  bool ok = true;
  std::string failed;  // "map", "R-forth", "R-back", "E-forth", "E-back"
  unsigned x = 0;
  unsigned y = 0;
};

// p-morphism conditions for a single pair of relations.
MorphismVerdict check_p_morphism(const PointMap &f, const Relation &s,
                                 const Relation &t, std::string_view label);

MorphismVerdict is_p_morphism(const PointMap &f, const Frame &from,
                              const Frame &to);

inline constexpr unsigned kDefaultIsomorphismCap = 24;

/// First isomorphism F -> G in the canonical backtracking order, or nullopt.
/// Throws BudgetError above `cap` points.
std::optional<PointMap> find_isomorphism(const Frame &f, const Frame &g,
                                         unsigned cap = kDefaultIsomorphismCap);

}  // namespace ms4wb

#endif  // MS4WB_FRAME_HPP_
