//
// ms4wb - Copyright 2026 The ms4wb Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <gtest/gtest.h>

#include <cstdlib>
#include <string>

#include "ms4wb/corpus.hpp"
#include "ms4wb/formula.hpp"
#include "support.hpp"

namespace ms4wb {
namespace {

Formula p() { return Formula::var("p"); }

TEST(Parse, DiamondImpliesExists) {
  auto f = parse("<>p -> E p");
  EXPECT_EQ(f, Formula::implies(Formula::dia(p()), Formula::ex(p())));
  EXPECT_EQ(f.language(), Language::kMs4);
}

TEST(Parse, BlackBoxExpands) {
  EXPECT_EQ(parse("#[] p"), Formula::box(Formula::all(p())));
  EXPECT_EQ(parse("#<>p"), Formula::dia(Formula::ex(p())));
}

TEST(Parse, LeftCommutativity) {
  auto f = parse("E <> p -> <> E p");
  EXPECT_EQ(f, Formula::implies(Formula::ex(Formula::dia(p())), Formula::dia(Formula::ex(p()))));
  EXPECT_EQ(f, axiom("ms4.commute"));
}

TEST(Parse, PrecedenceAndAssociativity) {
  auto q = Formula::var("q"), r = Formula::var("r");
  EXPECT_EQ(parse("p -> q -> r"), Formula::implies(p(), Formula::implies(q, r)));
  EXPECT_EQ(parse("p | q & r"), Formula::disj(p(), Formula::conj(q, r)));
  EXPECT_EQ(parse("~p & q"), Formula::conj(Formula::neg(p()), q));
  EXPECT_EQ(parse("<>p & q"), Formula::conj(Formula::dia(p()), q));
  EXPECT_EQ(parse("0 | 1"), Formula::disj(Formula::bot(), Formula::top()));
}

TEST(Parse, S52Operators) {
  auto f = parse("<1>p | [2]~q");
  EXPECT_EQ(f.language(), Language::kS52);
  EXPECT_EQ(f.lhs().connective(), Connective::kEx1);
  EXPECT_EQ(f.rhs().connective(), Connective::kAll2);
}

TEST(Parse, Errors) {
  auto position_of = [](const char *text) -> std::size_t {
    try {
      parse(text);
    } catch (const ParseError &e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position_of("p ->"), 4u);
  EXPECT_EQ(position_of("(p"), 2u);
  EXPECT_EQ(position_of("p q"), 2u);
  EXPECT_EQ(position_of("<3>p"), 0u);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("P"), ParseError);
}

TEST(Parse, ReservedWords) {
  try {
    parse("p & A");
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("reserved word 'A'"), std::string::npos);
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse("E"), ParseError);
}

TEST(Parse, MixedLanguagesRejected) {
  EXPECT_THROW(parse("<>p & <1>p"), InputError);
  EXPECT_THROW(Formula::conj(parse("E p"), parse("<2>p")), InputError);
}

TEST(Print, NormalForm) {
  EXPECT_EQ(to_string(parse("#[] p")), "[]A p");
  EXPECT_EQ(to_string(parse("E <> p -> <> E p")), "E <>p -> <>E p");
  EXPECT_EQ(to_string(parse("(p -> q) -> r")), "(p -> q) -> r");
  EXPECT_EQ(to_string(parse("p -> (q -> r)")), "p -> q -> r");
  EXPECT_EQ(to_string(parse("(p | q) & r")), "(p | q) & r");
  EXPECT_EQ(to_string(parse("~(p & q)")), "~(p & q)");
  EXPECT_EQ(to_string(parse("<1>p|[2]~q")), "<1>p | [2]~q");
}

TEST(Print, RoundTripOnSamples) {
  for (const char *text : {"p", "~~p", "E A p", "<>(p & q) -> [](q | ~r)", "0 -> 1",
                           "(p -> q) & (q -> p)", "p & (q & r)", "(p | q) | r"}) {
    auto f = parse(text);
    EXPECT_EQ(parse(to_string(f)), f) << text;
    EXPECT_EQ(to_string(parse(to_string(f))), to_string(f)) << text;
  }
}

TEST(FormulaShape, SizeDepthVariables) {
  auto f = parse("<>(q & p) -> E q");
  EXPECT_EQ(f.variables(), (std::vector<std::string>{"p", "q"}));
  EXPECT_EQ(f.size(), 7u);
  EXPECT_EQ(f.depth(), 4u);
}

TEST(Eval, Fig2FExamples) {
  auto f = fig2_f();
  Valuation v{{"p", f.set_of({"b"})}};
  EXPECT_EQ(eval(f, parse("<>p"), v), f.full());
  EXPECT_EQ(eval(f, parse("E p"), v), f.full());
  EXPECT_EQ(eval(f, parse("[]p"), v), f.set_of({"b"}));
}

TEST(Eval, Fig2GExamples) {
  auto g = fig2_g();
  Valuation v{{"p", g.set_of({"1", "2"})}};
  EXPECT_EQ(eval(g, parse("<>[]p"), v), g.set_of({"1", "2"}));
  EXPECT_EQ(eval(g, parse("[]p"), v), g.set_of({"1", "2"}));
}

TEST(Eval, MissingVariableIsAnError) {
  EXPECT_THROW(eval(fig2_f(), parse("p & q"), {{"p", fig2_f().full()}}), InputError);
}

TEST(Eval, LanguageMismatchIsAnError) {
  EXPECT_THROW(eval(fig2_f(), parse("<1>p"), {{"p", fig2_f().full()}}), InputError);
  auto s = snake(2);
  EXPECT_THROW(eval(s, parse("<>p"), {{"p", s.full()}}), InputError);
}

TEST(Eval, S52Semantics) {
  auto s = snake(4);
  Valuation v{{"p", s.set_of({"p0"})}};
  EXPECT_EQ(eval(s, parse("<2>p"), v), s.set_of({"p0", "p1"}));
  EXPECT_EQ(eval(s, parse("<1><2>p"), v), s.set_of({"p0", "p1", "p2"}));
  EXPECT_EQ(eval(s, parse("0"), v), PointSet::empty(4));
}

TEST(Validity, Fig2Examples) {
  auto f = fig2_f(), g = fig2_g();
  EXPECT_TRUE(is_valid(f, parse("<>p -> E p")).valid);
  auto r = is_valid(f, parse("<>[]p -> []p"));
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(r.counterexample->at("p"), f.set_of({"b"}));
  EXPECT_EQ(r.failing_points, f.set_of({"a"}));
  EXPECT_EQ(r.valuations_checked, 3u);
  EXPECT_FALSE(is_valid(g, parse("<>p -> E p")).valid);
  EXPECT_TRUE(is_valid(g, parse("<>[]p -> []p")).valid);
}

TEST(Validity, CounterexampleIsFirstInEnumerationOrder) {
  // p is the most significant variable: every q is tried before p moves.
  auto f = fig2_f();
  auto r = is_valid(f, parse("p | q"));
  ASSERT_FALSE(r.valid);
  EXPECT_TRUE(r.counterexample->at("p").is_empty());
  EXPECT_TRUE(r.counterexample->at("q").is_empty());
  auto s = is_valid(f, parse("p -> q"));
  ASSERT_FALSE(s.valid);
  EXPECT_EQ(s.counterexample->at("p"), f.set_of({"a"}));
  EXPECT_TRUE(s.counterexample->at("q").is_empty());
}

TEST(Validity, BudgetIsEnforced) {
  auto t = three_layer(2);  // 14 points, 3 variables: 2^42 valuations
  EXPECT_THROW(is_valid(t, parse("p & q & r"), 1000), BudgetError);
  EXPECT_NO_THROW(is_valid(fig2_f(), parse("p"), 4));
  EXPECT_THROW(is_valid(fig2_f(), parse("p"), 3), BudgetError);
}

TEST(Validity, BudgetFromEnvironment) {
  ::unsetenv("MS4WB_BUDGET");
  EXPECT_EQ(valuation_budget_from_environment(), kDefaultValuationBudget);
  ::setenv("MS4WB_BUDGET", "123", 1);
  EXPECT_EQ(valuation_budget_from_environment(), 123u);
  ::setenv("MS4WB_BUDGET", "lots", 1);
  EXPECT_THROW(valuation_budget_from_environment(), InputError);
  ::unsetenv("MS4WB_BUDGET");
}

TEST(Axioms, RegistryFormulas) {
  EXPECT_EQ(axiom("P", 1), parse("<>[]q1 -> []q1"));
  EXPECT_EQ(axiom("P", 2), parse("<>([]q2 & ~(<>[]q1 -> []q1)) -> []q2"));
  EXPECT_EQ(axiom("alt0", 1), parse("[]A p1 | [](A p1 -> A p2)"));
  EXPECT_EQ(axiom("alt0", 2),
            parse("[]A p1 | [](A p1 -> A p2) | [](A p1 & A p2 -> A p3)"));
  EXPECT_EQ(axiom("ms4s"), parse("<>E []A p -> []A p"));
  EXPECT_EQ(axiom("ms4s"), parse("#<>#[]p -> #[]p"));
  EXPECT_EQ(axiom("s4u.bridge"), parse("<>p -> E p"));
  EXPECT_EQ(axiom("s52.sym"), parse("<>[]p -> []p"));
  EXPECT_EQ(axiom("s52.trans", 0), parse("<1>p | <2>p -> p"));
  EXPECT_EQ(axiom("lemma2_3.3"), parse("E []p -> []E p"));
}

TEST(Axioms, SpecParsingAndErrors) {
  auto s = parse_axiom_spec("P:2");
  EXPECT_EQ(s.name, "P");
  EXPECT_EQ(s.k, 2);
  EXPECT_FALSE(parse_axiom_spec("ms4s").k.has_value());
  EXPECT_THROW(axiom("nope"), InputError);
  EXPECT_THROW(axiom("P"), InputError);
  EXPECT_THROW(axiom("P", 0), InputError);
  EXPECT_THROW(axiom("alt0", 0), InputError);
  EXPECT_THROW(parse_axiom_spec("P:x"), InputError);
  EXPECT_FALSE(axiom_names().empty());
}

TEST(Axioms, RelationalFastPaths) {
  EXPECT_EQ(relational_verdict(fig2_f(), parse_axiom_spec("s4u.bridge")), true);
  EXPECT_EQ(relational_verdict(fig2_f(), parse_axiom_spec("s52.sym")), false);
  EXPECT_EQ(relational_verdict(fig2_g(), parse_axiom_spec("ms4s")), true);
  EXPECT_EQ(relational_verdict(testing::chain3(), parse_axiom_spec("P:2")), false);
  EXPECT_EQ(relational_verdict(testing::chain3(), parse_axiom_spec("P:3")), true);
}

}  // namespace
}  // namespace ms4wb
