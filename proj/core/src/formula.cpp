//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "ms4wb/formula.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "ms4wb/error.hpp"
#include "ms4wb/frame.hpp"
#include "ms4wb/s52.hpp"

namespace ms4wb {

std::string_view language_name(Language l) {
  switch (l) {
    case Language::kNeutral: return "neutral";
    case Language::kMs4: return "ms4";
    case Language::kS52: return "s52";
  }
  return "?";
}

namespace {

Language language_of(Connective c) {
  switch (c) {
    case Connective::kDia:
    case Connective::kBox:
    case Connective::kEx:
    case Connective::kAll: return Language::kMs4;
    case Connective::kEx1:
    case Connective::kAll1:
    case Connective::kEx2:
    case Connective::kAll2: return Language::kS52;
    default: return Language::kNeutral;
  }
}

Language combine(Language a, Language b) {
  if (a == Language::kNeutral) return b;
  if (b == Language::kNeutral || a == b) return a;
  throw InputError("formula mixes MS4 and S5_2 operators");
}

bool is_unary(Connective c) {
  return c == Connective::kNot || language_of(c) != Language::kNeutral;
}

bool is_binary(Connective c) {
  return c == Connective::kAnd || c == Connective::kOr ||
         c == Connective::kImplies;
}

}  // namespace

Formula Formula::var(std::string name) {
  return Formula(std::make_shared<const Node>(
      Node{Connective::kVar, std::move(name), {}, Language::kNeutral}));
}

Formula Formula::bot() {
  return Formula(std::make_shared<const Node>(
      Node{Connective::kBot, {}, {}, Language::kNeutral}));
}

Formula Formula::top() {
  return Formula(std::make_shared<const Node>(
      Node{Connective::kTop, {}, {}, Language::kNeutral}));
}

Formula Formula::unary(Connective c, const Formula &a) {
  if (!is_unary(c)) throw InputError("not a unary connective");
  Language l = combine(language_of(c), a.language());
  return Formula(std::make_shared<const Node>(Node{c, {}, {a}, l}));
}

Formula Formula::binary(Connective c, const Formula &a, const Formula &b) {
  if (!is_binary(c)) throw InputError("not a binary connective");
  Language l = combine(a.language(), b.language());
  return Formula(std::make_shared<const Node>(Node{c, {}, {a, b}, l}));
}

unsigned Formula::arity() const {
  return static_cast<unsigned>(node_->kids.size());
}

std::vector<std::string> Formula::variables() const {
  std::set<std::string> names;
  std::function<void(const Formula &)> walk = [&](const Formula &f) {
    if (f.connective() == Connective::kVar) names.insert(f.name());
    for (const auto &k : f.node_->kids) walk(k);
  };
  walk(*this);
  return {names.begin(), names.end()};
}

std::size_t Formula::size() const {
  std::size_t n = 1;
  for (const auto &k : node_->kids) n += k.size();
  return n;
}

std::size_t Formula::depth() const {
  std::size_t d = 0;
  for (const auto &k : node_->kids) d = std::max(d, k.depth());
  return d + 1;
}

bool operator==(const Formula &a, const Formula &b) {
  if (a.node_ == b.node_) return true;
  if (a.connective() != b.connective() || a.name() != b.name() ||
      a.arity() != b.arity())
    return false;
  for (unsigned i = 0; i < a.arity(); ++i)
    if (!(a.node_->kids[i] == b.node_->kids[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string &msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_space();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool at_operand_end() {
    skip_space();
    if (pos_ == text_.size()) return true;
    char c = text_[pos_];
    return c == ')' || c == '&' || c == '|' || text_.substr(pos_, 2) == "->";
  }

  Formula build(const std::function<Formula()> &make, std::size_t at) {
    try {
      return make();
    } catch (const ParseError &) {
      throw;
    } catch (const InputError &e) {
      throw ParseError(e.what(), at);
    }
  }

  Formula implication() {
    Formula lhs = disjunction();
    std::size_t at = pos_;
    if (accept("->")) {
      Formula rhs = implication();
      return build([&] { return Formula::implies(lhs, rhs); }, at);
    }
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    for (;;) {
      std::size_t at = pos_;
      if (!accept("|")) return f;
      Formula rhs = conjunction();
      f = build([&] { return Formula::disj(f, rhs); }, at);
    }
  }

  Formula conjunction() {
    Formula f = unary();
    for (;;) {
      std::size_t at = pos_;
      if (!accept("&")) return f;
      Formula rhs = unary();
      f = build([&] { return Formula::conj(f, rhs); }, at);
    }
  }

  Formula prefixed(Connective c, std::size_t at) {
    Formula operand = unary();
    return build([&] { return Formula::unary(c, operand); }, at);
  }

  Formula unary() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ == text_.size()) fail("unexpected end of input");
    if (accept("~")) return prefixed(Connective::kNot, at);
    if (accept("<>")) return prefixed(Connective::kDia, at);
    if (accept("[]")) return prefixed(Connective::kBox, at);
    if (accept("<1>")) return prefixed(Connective::kEx1, at);
    if (accept("[1]")) return prefixed(Connective::kAll1, at);
    if (accept("<2>")) return prefixed(Connective::kEx2, at);
    if (accept("[2]")) return prefixed(Connective::kAll2, at);
    if (accept("#<>")) {
      Formula operand = unary();
      return build([&] { return Formula::black_dia(operand); }, at);
    }
    if (accept("#[]")) {
      Formula operand = unary();
      return build([&] { return Formula::black_box(operand); }, at);
    }
    if (accept("(")) {
      Formula f = implication();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    char c = text_[pos_];
    if (c == '0' || c == '1') {
      ++pos_;
      return c == '0' ? Formula::bot() : Formula::top();
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
        ++end;
      std::string word(text_.substr(pos_, end - pos_));
      if (word == "E" || word == "A") {
        pos_ = end;
        if (at_operand_end()) {
          pos_ = at;
          fail("reserved word '" + word + "' used as a variable");
        }
        return prefixed(word == "E" ? Connective::kEx : Connective::kAll, at);
      }
      if (!std::islower(static_cast<unsigned char>(word[0])))
        fail("variable '" + word + "' must start with a lowercase letter");
      for (char ch : word)
        if (std::isupper(static_cast<unsigned char>(ch)))
          fail("variable '" + word + "' must be lowercase");
      pos_ = end;
      return Formula::var(std::move(word));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

int precedence(const Formula &f) {
  switch (f.connective()) {
    case Connective::kImplies: return 1;
    case Connective::kOr: return 2;
    case Connective::kAnd: return 3;
    default: return 4;
  }
}

std::string_view prefix(Connective c) {
  switch (c) {
    case Connective::kNot: return "~";
    case Connective::kDia: return "<>";
    case Connective::kBox: return "[]";
    case Connective::kEx: return "E ";
    case Connective::kAll: return "A ";
    case Connective::kEx1: return "<1>";
    case Connective::kAll1: return "[1]";
    case Connective::kEx2: return "<2>";
    case Connective::kAll2: return "[2]";
    default: return "";
  }
}

void print(const Formula &f, std::string &out) {
  auto wrapped = [&](const Formula &g, bool paren) {
    if (paren) out += '(';
    print(g, out);
    if (paren) out += ')';
  };
  switch (f.connective()) {
    case Connective::kVar: out += f.name(); return;
    case Connective::kBot: out += '0'; return;
    case Connective::kTop: out += '1'; return;
    case Connective::kAnd:
    case Connective::kOr:
    case Connective::kImplies: {
      const int p = precedence(f);
      const bool right_assoc = f.connective() == Connective::kImplies;
      wrapped(f.lhs(), right_assoc ? precedence(f.lhs()) <= p : precedence(f.lhs()) < p);
      out += f.connective() == Connective::kAnd  ? " & "
             : f.connective() == Connective::kOr ? " | "
                                                 : " -> ";
      wrapped(f.rhs(), right_assoc ? precedence(f.rhs()) < p : precedence(f.rhs()) <= p);
      return;
    }
    default:
      out += prefix(f.connective());
      wrapped(f.lhs(), precedence(f.lhs()) < 4);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Formula &f) {
  std::string out;
  print(f, out);
  return out;
}

CompiledFormula compile(const Formula &f) {
  CompiledFormula c;
  c.variables = f.variables();
  c.language = f.language();
  std::map<std::tuple<Connective, std::string, int, int>, int> seen;
  std::function<int(const Formula &)> visit = [&](const Formula &g) -> int {
    int a = g.arity() > 0 ? visit(g.lhs()) : -1;
    int b = g.arity() > 1 ? visit(g.rhs()) : -1;
    auto key = std::make_tuple(g.connective(), g.name(), a, b);
    if (auto it = seen.find(key); it != seen.end()) return it->second;
    CompiledFormula::Step s{g.connective(), a, b, -1};
    if (g.connective() == Connective::kVar) {
      auto it = std::lower_bound(c.variables.begin(), c.variables.end(), g.name());
      s.var = static_cast<int>(it - c.variables.begin());
    }
    int idx = static_cast<int>(c.steps.size());
    c.steps.push_back(s);
    c.terms.push_back(g);
    seen.emplace(key, idx);
    return idx;
  };
  visit(f);
  return c;
}

// ---------------------------------------------------------------------------
// Semantics

namespace {

// Operator images for every subset, when the frame is small enough.
constexpr unsigned kTableLimit = 12;

std::vector<std::uint64_t> preimage_table(const Relation &r) {
  const unsigned n = r.size();
  std::vector<std::uint64_t> t(std::size_t{1} << n, 0);
  for (std::uint64_t s = 1; s < t.size(); ++s) {
    unsigned low = static_cast<unsigned>(std::countr_zero(s));
    t[s] = t[s & (s - 1)] | r.preimage(low).bits();
  }
  return t;
}

struct RelationOp {
  const Relation *rel = nullptr;
  std::vector<std::uint64_t> table;

  void init(const Relation &r, bool tabulate) {
    rel = &r;
    if (tabulate) table = preimage_table(r);
  }
  PointSet operator()(const PointSet &u) const {
    if (!table.empty()) return PointSet(u.width(), table[u.bits()]);
    return rel->preimage(u);
  }
};

class FrameSemantics {
 public:
  FrameSemantics(const Frame &f, bool tabulate) : n_(f.size()) {
    dia_.init(f.r(), tabulate);
    ex_.init(f.e_relation(), tabulate);
  }
  unsigned width() const { return n_; }
  PointSet dia(const PointSet &u) const { return dia_(u); }
  PointSet ex(const PointSet &u) const { return ex_(u); }
  PointSet ex1(const PointSet &u) const { return u; }
  PointSet ex2(const PointSet &u) const { return u; }

 private:
  unsigned n_;
  RelationOp dia_, ex_;
};

class S52Semantics {
 public:
  S52Semantics(const S52Frame &f, bool tabulate) : n_(f.size()) {
    ex1_.init(f.e1_relation(), tabulate);
    ex2_.init(f.e2_relation(), tabulate);
  }
  unsigned width() const { return n_; }
  PointSet dia(const PointSet &u) const { return u; }
  PointSet ex(const PointSet &u) const { return u; }
  PointSet ex1(const PointSet &u) const { return ex1_(u); }
  PointSet ex2(const PointSet &u) const { return ex2_(u); }

 private:
  unsigned n_;
  RelationOp ex1_, ex2_;
};

void require_language(const CompiledFormula &c, Language frame) {
  if (c.language != Language::kNeutral && c.language != frame)
    throw InputError("language mismatch: " + std::string(language_name(c.language)) +
                     " formula on an " + std::string(language_name(frame)) + " frame");
}

std::vector<PointSet> valuation_vector(const CompiledFormula &c,
                                       const Valuation &v, unsigned width) {
  std::vector<PointSet> values;
  for (const auto &name : c.variables) {
    auto it = v.find(name);
    if (it == v.end()) throw InputError("valuation does not cover variable '" + name + "'");
    if (it->second.width() != width)
      throw InputError("valuation for '" + name + "' has the wrong width");
    values.push_back(it->second);
  }
  return values;
}

template <typename Sem>
PointSet eval_with(const Sem &sem, const CompiledFormula &c, const Valuation &v) {
  auto values = valuation_vector(c, v, sem.width());
  std::vector<PointSet> out;
  evaluate_steps(c, sem, values.data(), out);
  return out.back();
}

template <typename Sem>
ValidityResult sweep(const Sem &sem, const CompiledFormula &c,
                     std::uint64_t budget) {
  const unsigned n = sem.width();
  const auto k = static_cast<unsigned>(c.variables.size());
  const unsigned bits = k * n;
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget) {
    throw BudgetError("validity check needs 2^(" + std::to_string(k) +
                      " variables x " + std::to_string(n) + " points) = 2^" +
                      std::to_string(bits) + " valuations, budget is " +
                      std::to_string(budget));
  }
  const std::uint64_t total = std::uint64_t{1} << bits;
  const std::uint64_t mask = PointSet::mask(n);
  std::vector<PointSet> values(k, PointSet(n));
  std::vector<PointSet> out;
  ValidityResult result;
  for (std::uint64_t v = 0; v < total; ++v) {
    for (unsigned i = 0; i < k; ++i)
      values[i] = PointSet(n, (v >> ((k - 1 - i) * n)) & mask);
    evaluate_steps(c, sem, values.data(), out);
    ++result.valuations_checked;
    if (!out.back().is_full()) {
      result.valid = false;
      result.failing_points = out.back().complement();
      Valuation cex;
      for (unsigned i = 0; i < k; ++i) cex.emplace(c.variables[i], values[i]);
      result.counterexample = std::move(cex);
      return result;
    }
  }
  result.failing_points = PointSet(n);
  return result;
}

}  // namespace

PointSet eval(const Frame &f, const Formula &phi, const Valuation &v) {
  auto c = compile(phi);
  require_language(c, Language::kMs4);
  return eval_with(FrameSemantics(f, false), c, v);
}

PointSet eval(const S52Frame &f, const Formula &phi, const Valuation &v) {
  auto c = compile(phi);
  require_language(c, Language::kS52);
  return eval_with(S52Semantics(f, false), c, v);
}

std::vector<PointSet> eval_subterms(const Frame &f, const CompiledFormula &c,
                                    const Valuation &v) {
  require_language(c, Language::kMs4);
  FrameSemantics sem(f, false);
  auto values = valuation_vector(c, v, f.size());
  std::vector<PointSet> out;
  evaluate_steps(c, sem, values.data(), out);
  return out;
}

std::uint64_t valuation_budget_from_environment() {
  const char *raw = std::getenv("MS4WB_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultValuationBudget;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
    throw InputError("MS4WB_BUDGET must be a positive integer, got '" +
                     std::string(text) + "'");
  return value;
}

ValidityResult is_valid(const Frame &f, const Formula &phi, std::uint64_t budget) {
  auto c = compile(phi);
  require_language(c, Language::kMs4);
  return sweep(FrameSemantics(f, f.size() <= kTableLimit), c, budget);
}

ValidityResult is_valid(const S52Frame &f, const Formula &phi,
                        std::uint64_t budget) {
  auto c = compile(phi);
  require_language(c, Language::kS52);
  return sweep(S52Semantics(f, f.size() <= kTableLimit), c, budget);
}

// ---------------------------------------------------------------------------
// Axiom registry

namespace {

Formula v(const std::string &name) { return Formula::var(name); }

Formula p_formula(int n) {
  auto q = [](int i) { return v("q" + std::to_string(i)); };
  Formula p = Formula::implies(Formula::dia(Formula::box(q(1))), Formula::box(q(1)));
  for (int i = 2; i <= n; ++i)
    p = Formula::implies(
        Formula::dia(Formula::conj(Formula::box(q(i)), Formula::neg(p))),
        Formula::box(q(i)));
  return p;
}

Formula alt0_formula(int k) {
  auto all_p = [](int i) { return Formula::all(v("p" + std::to_string(i))); };
  Formula result = Formula::box(all_p(1));
  for (int i = 1; i <= k; ++i) {
    Formula premise = all_p(1);
    for (int j = 2; j <= i; ++j) premise = Formula::conj(premise, all_p(j));
    result = Formula::disj(result, Formula::box(Formula::implies(premise, all_p(i + 1))));
  }
  return result;
}

Formula s52_diamond_power(int k, const Formula &base) {
  Formula f = base;
  for (int i = 0; i < k; ++i)
    f = Formula::disj(Formula::unary(Connective::kEx1, f),
                      Formula::unary(Connective::kEx2, f));
  return f;
}

}  // namespace

AxiomSpec parse_axiom_spec(std::string_view text) {
  AxiomSpec spec;
  auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    auto rest = text.substr(colon + 1);
    int k = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
    if (ec != std::errc() || ptr != rest.data() + rest.size() || rest.empty())
      throw InputError("bad parameter in axiom '" + std::string(text) + "'");
    spec.k = k;
  }
  return spec;
}

const std::vector<std::string> &axiom_names() {
  static const std::vector<std::string> names{
      "ms4.commute", "ms4s",       "s4u.bridge", "s52.sym",    "P",
      "alt0",        "lemma2_3.1", "lemma2_3.2", "lemma2_3.3", "lemma2_3.4",
      "s52.trans"};
  return names;
}

Formula axiom(std::string_view name, std::optional<int> k) {
  const std::string n(name);
  auto no_k = [&] {
    if (k) throw InputError("axiom '" + n + "' takes no parameter");
  };
  auto need_k = [&](int min) {
    if (!k)
      throw InputError("axiom '" + n + "' needs a parameter, e.g. " + n + ":" +
                       std::to_string(std::max(min, 1)));
    if (*k < min)
      throw InputError("axiom '" + n + "' needs k >= " + std::to_string(min));
    return *k;
  };
  const Formula p = v("p");
  if (n == "ms4.commute") {
    no_k();
    return Formula::implies(Formula::ex(Formula::dia(p)), Formula::dia(Formula::ex(p)));
  }
  if (n == "ms4s") {
    no_k();
    return Formula::implies(Formula::black_dia(Formula::black_box(p)), Formula::black_box(p));
  }
  if (n == "s4u.bridge") {
    no_k();
    return Formula::implies(Formula::dia(p), Formula::ex(p));
  }
  if (n == "s52.sym") {
    no_k();
    return Formula::implies(Formula::dia(Formula::box(p)), Formula::box(p));
  }
  if (n == "P") return p_formula(need_k(1));
  if (n == "alt0") return alt0_formula(need_k(1));
  if (n == "lemma2_3.1") {
    no_k();
    return Formula::iff(Formula::ex(Formula::dia(Formula::ex(p))), Formula::dia(Formula::ex(p)));
  }
  if (n == "lemma2_3.2") {
    no_k();
    return Formula::iff(Formula::all(Formula::box(Formula::all(p))), Formula::box(Formula::all(p)));
  }
  if (n == "lemma2_3.3") {
    no_k();
    return Formula::implies(Formula::ex(Formula::box(p)), Formula::box(Formula::ex(p)));
  }
  if (n == "lemma2_3.4") {
    no_k();
    return Formula::iff(Formula::dia(Formula::all(Formula::dia(p))), Formula::all(Formula::dia(p)));
  }
  if (n == "s52.trans") {
    int kk = need_k(0);
    return Formula::implies(s52_diamond_power(kk + 1, p), s52_diamond_power(kk, p));
  }
  throw InputError("unknown axiom '" + n + "'");
}

std::optional<bool> relational_verdict(const Frame &f, const AxiomSpec &spec) {
  axiom(spec);  // validates name and parameter
  const auto &n = spec.name;
  if (n == "ms4.commute" || n.rfind("lemma2_3.", 0) == 0) return true;
  if (n == "ms4s") return q_relation(f).is_symmetric();
  if (n == "s4u.bridge") return f.r().subset_of(f.e_relation());
  if (n == "s52.sym") return f.r().is_symmetric();
  if (n == "P") return depth(f.r()) <= static_cast<unsigned>(*spec.k);
  if (n == "alt0") {
    if (!classify(f).is_si) return std::nullopt;
    return f.e().block_count() <= static_cast<unsigned>(*spec.k);
  }
  return std::nullopt;
}

std::optional<bool> relational_verdict(const S52Frame &f, const AxiomSpec &spec) {
  axiom(spec);
  if (spec.name == "s52.trans")
    return analyze_s52(f).transitivity_degree <= static_cast<unsigned>(*spec.k);
  return std::nullopt;
}

}  // namespace ms4wb
