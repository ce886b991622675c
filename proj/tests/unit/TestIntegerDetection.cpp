#include <catch2/catch_amalgamated.hpp>

#include <anthem/IntegerDetection.h>
#include <anthem/oracle/FormulaReader.h>

#include "../support/Helpers.h"

using namespace anthem;

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[integer detection] Arguments are annotated when their definitions force integers",
	"[integer detection]")
{
	SECTION("intervals")
	{
		CHECK(test::translateText("p(1..3).") == "forall N1 (p(N1) <-> N1 in 1..3)\nint(p/1@1)\n");
	}

	SECTION("symbolic values block annotations")
	{
		CHECK(test::translateText("p(a). p(1).") == "forall V1 (p(V1) <-> (V1 = a or V1 = 1))\n");
	}

	SECTION("external predicates are unknown")
	{
		CHECK(test::translateText("p(X) :- q(X). #external q(1).") == "forall V1 (p(V1) <-> q(V1))\n");
	}

	SECTION("annotations propagate through definitions")
	{
		CHECK(test::translateText("q(1..2). p(X) :- q(X).")
			== "forall N1 (q(N1) <-> N1 in 1..2)\nforall N2 (p(N2) <-> q(N2))\nint(q/1@1)\nint(p/1@1)\n");
	}

	SECTION("only the forced positions")
	{
		CHECK(test::translateText("p(X, 1) :- q(X). #external q(1).")
			== "forall V1, N1 (p(V1, N1) <-> (N1 = 1 and q(V1)))\nint(p/2@2)\n");
	}

	SECTION("existential variables are narrowed and arithmetic becomes single-valued")
	{
		CHECK(test::translateText("p(X + 1) :- q(X). q(1..3).")
			== "forall N1 (p(N1) <-> exists N2 (N1 = (N2 + 1) and q(N2)))\nforall N3 (q(N3) <-> N3 in 1..3)\n"
				"int(p/1@1)\nint(q/1@1)\n");
	}
}

TEST_CASE("[integer detection] Forcing and guarding", "[integer detection]")
{
	const auto x = fol::Variable::fresh();
	const IntegerAnnotations annotations{{{"q", 1}, 1}};
	const fol::Term interval = fol::SetOperation{BinaryOperator::Interval, fol::IntegerConstant{1},
		fol::IntegerConstant{3}};

	CHECK(forcesInteger(fol::In{x, interval}, x, annotations));
	CHECK(forcesInteger(fol::Predicate{"q", {x}}, x, annotations));
	CHECK(!forcesInteger(fol::Predicate{"r", {x}}, x, annotations));
	CHECK(forcesInteger(fol::And{{fol::Predicate{"r", {x}}, fol::Predicate{"q", {x}}}}, x, annotations));
	CHECK(!forcesInteger(fol::Or{{fol::Predicate{"r", {x}}, fol::Predicate{"q", {x}}}}, x, annotations));
	CHECK(forcesInteger(fol::Boolean{false}, x, annotations));
	CHECK(!forcesInteger(fol::Comparison{ComparisonOperator::Equal, x, fol::SymbolicConstant{"a"}}, x, annotations));

	CHECK(guardsInteger(fol::Or{{fol::Not{fol::Predicate{"q", {x}}}, fol::Predicate{"r", {x}}}}, x, annotations));
	CHECK(guardsInteger(fol::Implies{fol::In{x, interval}, fol::Predicate{"r", {x}}}, x, annotations));
	CHECK(!guardsInteger(fol::Implies{fol::Predicate{"r", {x}}, fol::Predicate{"q", {x}}}, x, annotations));
}

TEST_CASE("[integer detection] Universal variables of constraints are narrowed when guarded",
	"[integer detection]")
{
	const auto output = test::translateText("{p(1..3, Y)} :- Y = a. :- p(X1, Y), p(X2, Y), X1 != X2.");

	CHECK(output == "forall N1, V1 (p(N1, V1) -> (N1 in 1..3 and V1 = a))\n"
		"forall N2, U1, N3 (not p(N2, U1) or not p(N3, U1) or N2 = N3)\nint(p/2@1)\n");
}
