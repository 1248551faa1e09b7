//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef MS4WB_FORMULA_HPP_
#define MS4WB_FORMULA_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ms4wb/point_set.hpp"

namespace ms4wb {

class Frame;
class S52Frame;

enum class Connective {
  kVar,
  kBot,
  kTop,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kDia,
  kBox,
  kEx,
  kAll,
  kEx1,
  kAll1,
  kEx2,
  kAll2,
};

// Which modal vocabulary a formula uses. Neutral formulas are purely Boolean
// and evaluate on either kind of frame.
enum class Language { kNeutral, kMs4, kS52 };

std::string_view language_name(Language l);

/// Immutable formula tree. Black operators are expanded while building, so
/// Dia/Box/Ex/All and the indexed S5 operators are the only modal nodes.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula bot();
  static Formula top();
  static Formula unary(Connective c, const Formula &a);
  static Formula binary(Connective c, const Formula &a, const Formula &b);

  // Convenience builders.
  static Formula neg(const Formula &a) { return unary(Connective::kNot, a); }
  static Formula dia(const Formula &a) { return unary(Connective::kDia, a); }
  static Formula box(const Formula &a) { return unary(Connective::kBox, a); }
  static Formula ex(const Formula &a) { return unary(Connective::kEx, a); }
  static Formula all(const Formula &a) { return unary(Connective::kAll, a); }
  static Formula black_dia(const Formula &a) { return dia(ex(a)); }
  static Formula black_box(const Formula &a) { return box(all(a)); }
  static Formula conj(const Formula &a, const Formula &b) {
    return binary(Connective::kAnd, a, b);
  }
  static Formula disj(const Formula &a, const Formula &b) {
    return binary(Connective::kOr, a, b);
  }
  static Formula implies(const Formula &a, const Formula &b) {
    return binary(Connective::kImplies, a, b);
  }
  static Formula iff(const Formula &a, const Formula &b) {
    return conj(implies(a, b), implies(b, a));
  }

  Connective connective() const { return node_->op; }
  const std::string &name() const { return node_->name; }
  const Formula &lhs() const { return node_->kids[0]; }
  const Formula &rhs() const { return node_->kids[1]; }
  unsigned arity() const;
  Language language() const { return node_->language; }

  // Sorted, duplicate-free variable names.
  std::vector<std::string> variables() const;
  std::size_t size() const;  // number of nodes in the tree
  std::size_t depth() const;

  friend bool operator==(const Formula &a, const Formula &b);

 private:
  struct Node {
    Connective op;
    std::string name;
    std::vector<Formula> kids;
    Language language;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Grammar: constants 0 1, variables [a-z][a-z0-9_]*, prefix operators
/// ~ <> [] E A <1> [1] <2> [2] #<> #[], infix & | -> with precedence
/// unary > & > | > -> and -> right-associative. Throws ParseError.
Formula parse(std::string_view text);

// Printed normal form: minimal parentheses, spaces around infix operators,
// "E"/"A" followed by a space, symbolic prefixes attached.
std::string to_string(const Formula &f);

/// A formula flattened into a deduplicated node list in evaluation order
/// (children before parents); the last node is the root.
struct CompiledFormula {
  struct Step {
    Connective op;
    int a = -1;
    int b = -1;
    int var = -1;  // index into variables for kVar
  };
  std::vector<std::string> variables;
  std::vector<Step> steps;
  std::vector<Formula> terms;  // the subformula of each step
  Language language = Language::kNeutral;
};

CompiledFormula compile(const Formula &f);

// Evaluation over any structure exposing width() and the modal operators as
// maps on PointSet. Unsupported operators are never reached because the
// language is checked first.
template <typename Semantics>
void evaluate_steps(const CompiledFormula &c, const Semantics &sem,
                    const PointSet *values_of_vars, std::vector<PointSet> &out) {
  const unsigned w = sem.width();
  out.resize(c.steps.size());
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto &s = c.steps[i];
    auto at = [&](int k) -> const PointSet & { return out[static_cast<std::size_t>(k)]; };
    switch (s.op) {
      case Connective::kVar: out[i] = values_of_vars[s.var]; break;
      case Connective::kBot: out[i] = PointSet::empty(w); break;
      case Connective::kTop: out[i] = PointSet::full(w); break;
      case Connective::kNot: out[i] = at(s.a).complement(); break;
      case Connective::kAnd: out[i] = at(s.a) & at(s.b); break;
      case Connective::kOr: out[i] = at(s.a) | at(s.b); break;
      case Connective::kImplies: out[i] = at(s.a).complement() | at(s.b); break;
      case Connective::kDia: out[i] = sem.dia(at(s.a)); break;
      case Connective::kBox: out[i] = sem.dia(at(s.a).complement()).complement(); break;
      case Connective::kEx: out[i] = sem.ex(at(s.a)); break;
      case Connective::kAll: out[i] = sem.ex(at(s.a).complement()).complement(); break;
      case Connective::kEx1: out[i] = sem.ex1(at(s.a)); break;
      case Connective::kAll1: out[i] = sem.ex1(at(s.a).complement()).complement(); break;
      case Connective::kEx2: out[i] = sem.ex2(at(s.a)); break;
      case Connective::kAll2: out[i] = sem.ex2(at(s.a).complement()).complement(); break;
    }
  }
}

using Valuation = std::map<std::string, PointSet>;

// Throws InputError for a missing variable, a width mismatch or a language
// mismatch.
PointSet eval(const Frame &f, const Formula &phi, const Valuation &v);
PointSet eval(const S52Frame &f, const Formula &phi, const Valuation &v);

// Values of every compiled subterm, in compile() order.
std::vector<PointSet> eval_subterms(const Frame &f, const CompiledFormula &c,
                                    const Valuation &v);

inline constexpr std::uint64_t kDefaultValuationBudget = std::uint64_t{1} << 22;

// The budget named by MS4WB_BUDGET, or the default. Throws InputError when the
// variable is set but not a positive integer.
std::uint64_t valuation_budget_from_environment();

struct ValidityResult {
  bool valid = true;
  std::optional<Valuation> counterexample;
  PointSet failing_points;  // where the counterexample falsifies the formula
  std::uint64_t valuations_checked = 0;
};

/// Valuations are enumerated as one counter in which the first variable (in
/// sorted order) is most significant and each variable's set is read as the
/// bit mask of its points; the first failing valuation is returned. Throws
/// BudgetError when 2^(variables * points) exceeds the budget.
ValidityResult is_valid(const Frame &f, const Formula &phi,
                        std::uint64_t budget = kDefaultValuationBudget);
ValidityResult is_valid(const S52Frame &f, const Formula &phi,
                        std::uint64_t budget = kDefaultValuationBudget);

struct AxiomSpec {
  std::string name;
  std::optional<int> k;
};

// Parses "name" or "name:k".
AxiomSpec parse_axiom_spec(std::string_view text);

// Registered names, for listings and error messages.
const std::vector<std::string> &axiom_names();

/// Throws InputError for an unknown name or a missing or invalid k.
Formula axiom(std::string_view name, std::optional<int> k = std::nullopt);
inline Formula axiom(const AxiomSpec &s) { return axiom(s.name, s.k); }

/// Relational characterisation of a registered axiom on a frame, where one
/// exists: s52.sym iff R symmetric, ms4s iff Q symmetric, s4u.bridge iff
/// R <= E, P:n iff depth <= n, alt0:k iff |X/E| <= k (Q-rooted frames only),
/// ms4.commute and the lemma2_3 forms always. nullopt when no shortcut
/// applies.
std::optional<bool> relational_verdict(const Frame &f, const AxiomSpec &spec);
// s52.trans:k iff the transitivity degree is at most k.
std::optional<bool> relational_verdict(const S52Frame &f, const AxiomSpec &spec);

}  // namespace ms4wb

#endif  // MS4WB_FORMULA_HPP_
