// Copyright 2026 The Ontosem Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <string>
#include <vector>

#include "doctest.h"
#include "ontosem/logic_form.hpp"
#include "support/common.hpp"
#include "support/generators.hpp"

using namespace ontosem;

namespace {

Formula P(const char* name, std::vector<Term> args = {}, Tag tag = Tag::None) {
  return Formula::pred(name, std::move(args), tag);
}
Term v(const char* n) { return Term::var(n); }
Term typed(const char* n, const char* type,
           ExistenceMark e = ExistenceMark::Plain) {
  return Term::named(n, AnnotatedType(type, e));
}
Formula parsed(const char* text) { return parseFormula(text); }

}  // namespace

TEST_SUITE("logic_form") {

TEST_CASE("variable name space") {
  CHECK(isVariableName("x"));
  CHECK(isVariableName("a12"));
  CHECK_FALSE(isVariableName("jon"));
  CHECK_FALSE(isVariableName("X"));
  CHECK(Term::named("x").kind == Term::Kind::Var);
  CHECK(Term::named("me").kind == Term::Kind::Const);
}

TEST_CASE("simplify drops bottom from disjunctions") {
  const Formula beta = P("YOUNG", {v("x")});
  CHECK(simplify(Formula::disj({Formula::bottom(), beta})) == beta);
  CHECK(simplify(Formula::disj({Formula::bottom(), Formula::bottom()}))
            .isBottom());
  CHECK(simplify(Formula::disj({})).isBottom());
}

TEST_CASE("simplify collapses singletons and absorbs bottom in conjunctions") {
  const Formula alpha = P("OLD", {v("x")});
  const Formula beta = P("RED", {v("x")});
  CHECK(simplify(Formula::conj({alpha})) == alpha);
  CHECK(simplify(Formula::conj({alpha, Formula::bottom(), beta})).isBottom());
  CHECK(simplify(Formula::conj({alpha, Formula::conj({beta})})) ==
        Formula::conj({alpha, beta}));
  const auto q = Formula::quant(Quantifier::Exists, typed("x", "Human"),
                                Formula::conj({alpha, Formula::bottom()}));
  CHECK(simplify(q).isBottom());
}

TEST_CASE("expandExistence adds an Exist conjunct for must-exist binders") {
  const auto f = Formula::quant(
      Quantifier::Exists, typed("x", "Computer", ExistenceMark::MustExist),
      P("FIX", {Term::constant("jon"), v("x")}, Tag::Did));
  CHECK(render(expandExistence(f)) ==
        "(exists (x :: Computer) (and (Exist x) (FIX[did] jon x)))");
}

TEST_CASE("expandExistence turns need-not-exist binders into conditionals") {
  const auto f = Formula::quant(
      Quantifier::Exists, typed("x", "Computer", ExistenceMark::NeedNotExist),
      P("FIX", {Term::constant("jon"), v("x")}, Tag::Can));
  CHECK(render(expandExistence(f)) ==
        "(forall (x :: Computer) (implies (Exist x) (FIX[can] jon x)))");
}

TEST_CASE("expandExistence shares one block across a run of binders") {
  const auto f = parsed(
      "(exists (x :: Snake?E) (exists (y :: Tree?E) (CLIMB[can] x y)))");
  CHECK(alphaEq(expandExistence(f),
                parsed("(forall (s :: Snake) (forall (t :: Tree) (implies "
                       "(and (Exist s) (Exist t)) (CLIMB[can] s t))))")));
}

TEST_CASE("expandExistence leaves plain formulas alone") {
  const auto f = parsed("(exists1 (jon :: Human) (exists (d :: Dog) "
                        "(PAINT[did] jon d)))");
  CHECK(expandExistence(f) == f);
}

TEST_CASE("alphaEq") {
  CHECK(alphaEq(parsed("(exists (x :: Human) (P x))"),
                parsed("(exists (y :: Human) (P y))")));
  CHECK(alphaEq(parsed("(exists (x :: Human) (and (P x) (Q x)))"),
                parsed("(exists (x :: Human) (and (Q x) (P x)))")));
  CHECK_FALSE(alphaEq(parsed("(exists (x :: Human) (P x))"),
                      parsed("(exists1 (x :: Human) (P x))")));
  CHECK_FALSE(alphaEq(parsed("(exists (x :: Human) (P x))"),
                      parsed("(exists (x :: Car) (P x))")));
  CHECK_FALSE(alphaEq(parsed("(exists (jon :: Human) (P jon))"),
                      parsed("(exists (liz :: Human) (P liz))")));
  CHECK_FALSE(alphaEq(parsed("(exists (x :: Human) (exists (y :: Human) (R x y)))"),
                      parsed("(exists (x :: Human) (exists (y :: Human) (R y x)))")));
  CHECK_FALSE(alphaEq(parsed("(and (P x) (P x) (Q x))"),
                      parsed("(and (P x) (Q x) (Q x))")));
  CHECK(alphaEq(parsed("(or (P 1) (P 2))"), parsed("(or (P 2) (P 1))")));
}

TEST_CASE("render prints the canonical prefix syntax") {
  const auto f = Formula::quant(Quantifier::ExistsUnique,
                                typed("sheba", "Human"),
                                P("TEACHER", {Term::constant("sheba")}));
  CHECK(render(f) == "(exists1 (sheba :: Human) (TEACHER sheba))");
  CHECK(render(Formula::bottom()) == "#bottom");
  CHECK(render(Formula::equal(v("x"), Term::number(90))) == "(= x 90)");
  CHECK(render(Formula::quant(Quantifier::Exists,
                              typed("x", "Computer", ExistenceMark::MustExist),
                              P("P", {v("x")}))) ==
        "(exists (x :: Computer!E) (P x))");
  const auto many = Formula::quant(
      Quantifier::Exists,
      Term::var("x", AnnotatedType("Human", ExistenceMark::NeedNotExist,
                                   Multiplicity::Many)),
      P("P", {v("x")}));
  CHECK(render(many) == "(exists (x :: Human[1+]?E) (P x))");
}

TEST_CASE("parseFormula reads every construct") {
  const std::string text =
      "(forall (a :: Activity) (implies (and (EXERCISING a) (= a a)) "
      "(or #bottom (HAS (a :: Human) 7))))";
  const auto f = parseFormula(text);
  CHECK(render(f) == text);
  CHECK(f.kind() == Formula::Kind::Quant);
  CHECK(f.quantifier() == Quantifier::Forall);
  CHECK(f.body().kind() == Formula::Kind::Implies);
  const auto& has = f.body().consequent().children()[1];
  CHECK(has.name() == "HAS");
  REQUIRE(has.args()[0].type.has_value());
  CHECK(has.args()[0].type->base == "Human");
  CHECK(has.args()[1].kind == Term::Kind::Num);
  CHECK(has.args()[1].value == 7);
}

TEST_CASE("parseFormula rejects malformed input") {
  CHECK_ERROR(parseFormula("(exists (x :: Human) (P x)"), ErrorCode::Syntax);
  CHECK_ERROR(parseFormula("(exists x (P x))"), ErrorCode::Syntax);
  CHECK_ERROR(parseFormula("(implies (P x))"), ErrorCode::Syntax);
  CHECK_ERROR(parseFormula("(P x) (Q x)"), ErrorCode::Syntax);
  CHECK_ERROR(parseFormula(""), ErrorCode::Syntax);
}

TEST_CASE("render/parse round trip on random formulas") {
  ontosem::testing::Gen g(ontosem::testing::testSeed());
  ontosem::testing::FormulaGen fg(g, {});
  for (int i = 0; i < 100; ++i) {
    const Formula f = fg.closed();
    CAPTURE(render(f));
    CHECK(parseFormula(render(f)) == f);
  }
}

TEST_CASE("subformulas and free names") {
  const auto f = parsed("(exists (x :: Human) (and (P x) (R x jon y)))");
  CHECK(subformulas(f).size() == 4);
  CHECK(freeNames(f) == std::vector<std::string>{"jon", "y"});
}

}  // TEST_SUITE
