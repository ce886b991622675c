#include <catch2/catch_amalgamated.hpp>

#include <anthem/Format.h>
#include <anthem/Formula.h>

using namespace anthem;

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[format] Variables are named by sort and role", "[format]")
{
	const auto head = fol::Variable::fresh(fol::Sort::General, fol::VariableRole::Head);
	const auto integer = fol::Variable::fresh(fol::Sort::Integer);
	const auto general = fol::Variable::fresh();

	const fol::Formula formula = fol::ForAll{{head, integer},
		fol::Biconditional{fol::Predicate{"p", {head, integer}},
			fol::Exists{{general}, fol::Predicate{"q", {general, integer}}}}};

	CHECK(formatFormula(formula) == "forall V1, N1 (p(V1, N1) <-> exists U1 q(U1, N1))");
}

TEST_CASE("[format] A printer numbers variables across formulas", "[format]")
{
	FormulaPrinter printer;

	const auto makeFormula =
		[]()
		{
			const auto variable = fol::Variable::fresh();
			return fol::Formula(fol::ForAll{{variable}, fol::Predicate{"p", {variable}}});
		};

	CHECK(printer.print(makeFormula()) == "forall U1 p(U1)");
	CHECK(printer.print(makeFormula()) == "forall U2 p(U2)");
	CHECK(formatFormula(makeFormula()) == "forall U1 p(U1)");
}

TEST_CASE("[format] Connectives and terms are parenthesized", "[format]")
{
	const auto x = fol::Variable::fresh(fol::Sort::Integer);
	const fol::Formula p = fol::Predicate{"p", {}};
	const fol::Formula q = fol::Predicate{"q", {}};

	SECTION("binary connectives")
	{
		CHECK(formatFormula(fol::And{{p, q}}) == "(p and q)");
		CHECK(formatFormula(fol::Or{{p, q, fol::Not{p}}}) == "(p or q or not p)");
		CHECK(formatFormula(fol::Implies{p, fol::Biconditional{p, q}}) == "(p -> (p <-> q))");
		CHECK(formatFormula(fol::Not{fol::And{{p, q}}}) == "not (p and q)");
	}

	SECTION("truth values")
	{
		CHECK(formatFormula(fol::Boolean{true}) == "#true");
		CHECK(formatFormula(fol::Boolean{false}) == "#false");
	}

	SECTION("intervals right of membership")
	{
		const fol::Term interval = fol::SetOperation{BinaryOperator::Interval, fol::IntegerConstant{1},
			fol::SymbolicConstant{"n"}};

		CHECK(formatFormula(fol::In{x, interval}) == "N1 in 1..n");
		CHECK(formatFormula(fol::In{x, fol::SetOperation{BinaryOperator::Plus, interval, fol::IntegerConstant{1}}})
			== "N1 in ((1..n) + 1)");
	}

	SECTION("arithmetic")
	{
		const fol::Term sum = fol::Arithmetic{BinaryOperator::Plus, x, fol::IntegerConstant{-1}};

		CHECK(formatFormula(fol::Comparison{ComparisonOperator::LessEqual, sum, fol::IntegerConstant{3}})
			== "(N1 + -1) <= 3");
		CHECK(formatFormula(fol::Predicate{"in", {sum, x}}) == "in((N1 + -1), N1)");
	}
}

TEST_CASE("[format] Integer annotations", "[format]")
{
	FormulaPrinter printer;

	CHECK(printer.print(fol::IntegerAnnotation{{"in", 2}, 2}) == "int(in/2@2)");
}
