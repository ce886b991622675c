#include <catch2/catch_amalgamated.hpp>

#include <anthem/Completion.h>
#include <anthem/Parser.h>
#include <anthem/Translation.h>

#include "../support/Helpers.h"

using namespace anthem;

namespace
{

std::string completeText(const std::string &source)
{
	return test::translateText(source, {.complete = true, .simplify = false, .detectIntegers = false});
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[completion] Definitions collect all rules of a predicate", "[completion]")
{
	SECTION("disjunction of rule bodies")
	{
		CHECK(completeText("s(X) :- p(X). s(X) :- q(X). #external p(1). #external q(1).")
			== "forall V1 (s(V1) <-> (p(V1) or q(V1)))\n");
	}

	SECTION("predicates without rules are false")
	{
		CHECK(completeText("p :- not q.") == "(p <-> not q)\n(q <-> #false)\n");
	}

	SECTION("external predicates get no definition")
	{
		CHECK(completeText("p :- not q. #external q(0).") == "(p <-> not q)\n");
	}

	SECTION("choice rules only give necessary conditions")
	{
		CHECK(completeText("{q(X)} :- r(X). #external r(1).") == "forall V1 (q(V1) -> r(V1))\n");
	}

	SECTION("choice rules next to definite rules")
	{
		CHECK(completeText("{p(X)} :- q(X). p(a). #external q(1).")
			== "forall V1 (p(V1) <-> ((q(V1) and p(V1)) or V1 = a))\n");
	}

	SECTION("constraints follow the definitions in source order")
	{
		CHECK(completeText(":- p. p :- not q. :- q. #external q(0).") == "(p <-> not q)\nnot p\nnot q\n");
	}
}

TEST_CASE("[completion] Definition order follows first head occurrence", "[completion]")
{
	const auto program = parseProgram("b :- a. a :- c. d :- not e.");
	const auto result = complete(translateProgram(program), program);

	std::vector<std::string> order;

	for (const auto &definition : result.definitions)
		order.push_back(definition.predicate.name);

	CHECK(order == std::vector<std::string>{"b", "a", "d", "c", "e"});
	CHECK(result.definitions[0].kind == CompletedDefinition::Kind::Iff);
}

TEST_CASE("[completion] Head variables are shared between rules", "[completion]")
{
	const auto program = parseProgram("p(X, Y) :- q(X, Y). p(a, X) :- r(X). #external q(2). #external r(1).");
	const auto result = complete(translateProgram(program), program);

	REQUIRE(result.definitions.size() == 1);

	const auto &definition = result.definitions.front();
	const auto freeVariables = fol::freeVariables(definition.body);

	CHECK(freeVariables == std::set<fol::Variable>(definition.headVariables.begin(), definition.headVariables.end()));
	CHECK(fol::freeVariables(definitionFormula(definition)).empty());
}
