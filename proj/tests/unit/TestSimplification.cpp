#include <catch2/catch_amalgamated.hpp>

#include <anthem/Format.h>
#include <anthem/Simplification.h>
#include <anthem/oracle/FormulaReader.h>

#include "../support/Generators.h"

using namespace anthem;

namespace
{

std::string rewrite(Rewrite rewrite, const std::string &formula)
{
	return formatFormula(applyRewrite(rewrite, oracle::readFormula(formula)));
}

std::string simplified(const std::string &formula)
{
	return formatFormula(simplifyFormula(oracle::readFormula(formula)));
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[simplification] Individual rewrites", "[simplification]")
{
	SECTION("membership to equality")
	{
		CHECK(rewrite(Rewrite::MembershipToEquality, "forall U1 (U1 in a -> p(U1))") == "forall U1 (U1 = a -> p(U1))");
		CHECK(rewrite(Rewrite::MembershipToEquality, "forall N1 (N1 in 2..2 -> p(N1))")
			== "forall N1 (N1 = 2 -> p(N1))");
		CHECK(rewrite(Rewrite::MembershipToEquality, "forall N1 (N1 in 3..1 -> p(N1))") == "forall N1 (#false -> p(N1))");
		CHECK(rewrite(Rewrite::MembershipToEquality, "forall N1 (N1 in 1..n -> p(N1))")
			== "forall N1 (N1 in 1..n -> p(N1))");
	}

	SECTION("equality elimination")
	{
		CHECK(rewrite(Rewrite::EqualityElimination, "forall V1 (p(V1) <-> exists U1 (U1 = V1 and q(U1)))")
			== "forall V1 (p(V1) <-> q(V1))");
		CHECK(rewrite(Rewrite::EqualityElimination, "exists U1, U2 (q(U1, U2) and U2 = a)") == "exists U1 q(U1, a)");
		// Integer variables cannot take symbolic values
		CHECK(rewrite(Rewrite::EqualityElimination, "exists N1 (N1 = a and p(N1))") == "exists N1 (N1 = a and p(N1))");
		// The variable must not occur in the term
		CHECK(rewrite(Rewrite::EqualityElimination, "exists N1 (N1 = (N1 + 1) and p(N1))")
			== "exists N1 (N1 = (N1 + 1) and p(N1))");
	}

	SECTION("boolean identities")
	{
		CHECK(rewrite(Rewrite::BooleanIdentity, "(p and #true)") == "p");
		CHECK(rewrite(Rewrite::BooleanIdentity, "(p and #false)") == "#false");
		CHECK(rewrite(Rewrite::BooleanIdentity, "(p or #false)") == "p");
		CHECK(rewrite(Rewrite::BooleanIdentity, "(p or #true)") == "#true");
		CHECK(rewrite(Rewrite::BooleanIdentity, "(#true -> p)") == "p");
		CHECK(rewrite(Rewrite::BooleanIdentity, "not #false") == "#true");
		CHECK(rewrite(Rewrite::BooleanIdentity, "(1 = 1 and p)") == "p");
		CHECK(rewrite(Rewrite::BooleanIdentity, "(1 < 0 or p)") == "p");
	}

	SECTION("double negation")
	{
		CHECK(rewrite(Rewrite::DoubleNegation, "not not p") == "p");
		CHECK(rewrite(Rewrite::DoubleNegation, "not not not p") == "not p");
	}

	SECTION("constraints become universal statements")
	{
		CHECK(rewrite(Rewrite::ConstraintToUniversal, "not exists U1, U2 (p(U1) and q(U1, U2) and U1 != U2)")
			== "forall U1, U2 (not p(U1) or not q(U1, U2) or U1 = U2)");
		CHECK(rewrite(Rewrite::ConstraintToUniversal, "not exists U1 (p(U1) and not q(U1, U1))")
			== "forall U1 (not p(U1) or q(U1, U1))");
	}

	SECTION("clauses become implications")
	{
		CHECK(rewrite(Rewrite::ClauseToImplication, "forall U1 (not p(U1) or q(U1, U1))") == "forall U1 (p(U1) -> q(U1, U1))");
		CHECK(rewrite(Rewrite::ClauseToImplication, "forall U1 (not p(U1) or not r)") == "forall U1 (not p(U1) or not r)");
	}

	SECTION("quantifier pruning")
	{
		CHECK(rewrite(Rewrite::QuantifierPruning, "exists U1, U2 p(U1)") == "exists U1 p(U1)");
		CHECK(rewrite(Rewrite::QuantifierPruning, "forall U1 r") == "r");
	}
}

TEST_CASE("[simplification] Rewrites combine to a fixpoint", "[simplification]")
{
	CHECK(simplified("not exists U1 (p(U1) and not exists U2 q(U1, U2))") == "forall U1 (p(U1) -> exists U2 q(U1, U2))");
	CHECK(simplified("exists U1 (U1 in a and not not p(U1))") == "p(a)");
	CHECK(simplified("(#true and not not #false)") == "#false");
}

TEST_CASE("[simplification] Root rewrites apply to sentences only", "[simplification]")
{
	const auto formula = oracle::readFormula("(r -> not exists U1 (p(U1) and q(U1, U1)))");

	CHECK(formatFormula(simplifySubformulas(formula)) == "(r -> not exists U1 (p(U1) and q(U1, U1)))");
}

TEST_CASE("[simplification] Simplification is idempotent on random formulas", "[simplification]")
{
	test::Random random(3);

	for (int i = 0; i < 300; i++)
	{
		const auto formula = test::randomFormula(random);
		const auto once = simplifyFormula(formula);
		INFO(formatFormula(formula));
		CHECK(simplifyFormula(once) == once);
		CHECK(fol::satisfiesInvariants(once));
	}
}
