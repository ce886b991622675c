#include <catch2/catch_amalgamated.hpp>

#include <anthem/Parser.h>
#include <anthem/Translation.h>

#include "../support/Helpers.h"

using namespace anthem;

namespace
{

std::string translateRules(const std::string &source)
{
	return test::translateText(source, {.complete = false, .simplify = false, .detectIntegers = false});
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[translation] Rules become implications", "[translation]")
{
	SECTION("variables in heads become head variables")
	{
		CHECK(translateRules("p(X) :- q(X).") == "forall V1 (q(V1) -> p(V1))\n");
	}

	SECTION("multi-valued head arguments are bound by membership")
	{
		CHECK(translateRules("p(1..3).") == "forall V1 (V1 in 1..3 -> p(V1))\n");
		CHECK(translateRules("p(X + 1) :- q(X).") == "forall V1 (exists U1 (V1 in (U1 + 1) and q(U1)) -> p(V1))\n");
	}

	SECTION("constant head arguments")
	{
		CHECK(translateRules("p(a).") == "forall V1 (V1 = a -> p(V1))\n");
	}

	SECTION("repeated head variables")
	{
		CHECK(translateRules("p(X, X) :- q(X).") == "forall V1, V2 ((V2 = V1 and q(V1)) -> p(V1, V2))\n");
	}

	SECTION("body-only variables are existentially quantified")
	{
		CHECK(translateRules("p(X) :- q(X, Y), r(Y).") == "forall V1 (exists U1 (q(V1, U1) and r(U1)) -> p(V1))\n");
	}

	SECTION("anonymous variables")
	{
		CHECK(translateRules("p(X) :- q(X, _).") == "forall V1 (exists U1 q(V1, U1) -> p(V1))\n");
		CHECK(translateRules("p(X) :- q(X), not r(X, _).")
			== "forall V1 ((q(V1) and not exists U1 r(V1, U1)) -> p(V1))\n");
	}

	SECTION("comparisons with multi-valued terms become membership")
	{
		CHECK(translateRules("p(X) :- X = 1..3, not q(X).") == "forall V1 ((V1 in 1..3 and not q(V1)) -> p(V1))\n");
	}

	SECTION("choice rules are reversed")
	{
		CHECK(translateRules("{p(X)} :- q(X).") == "forall V1 (p(V1) -> q(V1))\n");
	}

	SECTION("constraints are negated existential closures")
	{
		CHECK(translateRules(":- p(X), not q(X).") == "not exists U1 (p(U1) and not q(U1))\n");
	}

	SECTION("propositional rules")
	{
		CHECK(translateRules("p :- not q.") == "(not q -> p)\n");
		CHECK(translateRules("p.") == "(#true -> p)\n");
	}
}

TEST_CASE("[translation] Rule formulas record their kind and predicate", "[translation]")
{
	const auto program = parseProgram("p(X) :- q(X). {r}. :- p(a).");
	const auto ruleFormulas = translateProgram(program);

	REQUIRE(ruleFormulas.size() == 3);
	CHECK(ruleFormulas[0].kind == RuleFormula::Kind::Definite);
	CHECK(ruleFormulas[0].predicate == PredicateSignature{"p", 1});
	CHECK(ruleFormulas[0].headVariables.size() == 1);
	CHECK(ruleFormulas[1].kind == RuleFormula::Kind::Choice);
	CHECK(ruleFormulas[1].predicate == PredicateSignature{"r", 0});
	CHECK(ruleFormulas[2].kind == RuleFormula::Kind::Constraint);

	for (const auto &ruleFormula : ruleFormulas)
		CHECK(fol::satisfiesInvariants(ruleFormulaToFormula(ruleFormula)));
}
