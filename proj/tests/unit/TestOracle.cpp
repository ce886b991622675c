#include <catch2/catch_amalgamated.hpp>

#include <anthem/Format.h>
#include <anthem/Parser.h>
#include <anthem/Pipeline.h>
#include <anthem/oracle/Correspondence.h>
#include <anthem/oracle/Evaluation.h>
#include <anthem/oracle/FormulaReader.h>
#include <anthem/oracle/Grounding.h>
#include <anthem/oracle/StableModels.h>

#include "../support/Generators.h"
#include "../support/Helpers.h"

using namespace anthem;
using namespace anthem::oracle;

namespace
{

GroundAtom atom(const std::string &predicate, std::vector<Value> arguments = {})
{
	return {predicate, std::move(arguments)};
}

Value symbol(const std::string &name)
{
	return Value::symbol(name);
}

Value integer(std::int64_t value)
{
	return Value::integer(value);
}

std::set<std::string> groundRuleTexts(const std::string &source, const Domain &domain,
	const Interpretation &externalInput = {})
{
	std::set<std::string> result;

	for (const auto &rule : ground(parseProgram(source), domain, externalInput).rules)
		result.insert(toString(rule));

	return result;
}

std::vector<Interpretation> programModels(const std::string &source, const Domain &domain)
{
	return stableModels(ground(parseProgram(source), domain, {}));
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[oracle] Grounding", "[oracle]")
{
	SECTION("ground programs")
	{
		CHECK(groundRuleTexts("p(a). {q(a)}.", Domain::make({"a"}, 0, -1))
			== std::set<std::string>{"p(a).", "{q(a)}."});
	}

	SECTION("intervals expand into one rule per value")
	{
		CHECK(groundRuleTexts("q(X) :- X = 1..2.", Domain::make({}, 0, 3)) == std::set<std::string>{"q(1).", "q(2)."});
	}

	SECTION("duplicate instances collapse")
	{
		CHECK(groundRuleTexts("composite(I * J) :- I = 2..3, J = 2..3.", Domain::make({}, 0, 9))
			== std::set<std::string>{"composite(4).", "composite(6).", "composite(9)."});
	}

	SECTION("heads outside of the domain are dropped")
	{
		CHECK(groundRuleTexts("p(1..5).", Domain::make({}, 0, 2)) == std::set<std::string>{"p(1).", "p(2)."});
		CHECK(groundRuleTexts("p(3 / 0).", Domain::make({}, 0, 2)).empty());
	}

	SECTION("external atoms are evaluated")
	{
		const auto domain = Domain::make({"a", "b"}, 0, -1);

		CHECK(groundRuleTexts("s(X) :- p(X). #external p(1).", domain, {atom("p", {symbol("b")})})
			== std::set<std::string>{"s(b)."});
		CHECK(groundRuleTexts("s(X) :- r(X), not p(X). r(a). r(b). #external p(1).", domain, {atom("p", {symbol("b")})})
			== std::set<std::string>{"r(a).", "r(b).", "s(a) :- r(a)."});
	}

	SECTION("underivable atoms are pruned")
	{
		CHECK(groundRuleTexts("p :- q. r :- not q. s :- not t. t :- not s.", Domain{})
			== std::set<std::string>{"r.", "s :- not t.", "t :- not s."});
	}

	SECTION("anonymous variables in negative literals are projected")
	{
		CHECK(groundRuleTexts("q(a, b). p(X) :- r(X), not q(X, _). r(a). r(b).", Domain::make({"a", "b"}, 0, -1))
			== std::set<std::string>{"q(a, b).", "r(a).", "r(b).", "p(a) :- r(a), not q(a, b).", "p(b) :- r(b)."});
	}
}

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[oracle] Stable models", "[oracle]")
{
	const Domain domain = Domain::make({"a"}, 0, -1);

	SECTION("choice")
	{
		CHECK(programModels("p(a). {q(a)}.", domain) == std::vector<Interpretation>{
			{atom("p", {symbol("a")})},
			{atom("p", {symbol("a")}), atom("q", {symbol("a")})}});
	}

	SECTION("even negative loop")
	{
		CHECK(programModels("p :- not q. q :- not p.", domain) == std::vector<Interpretation>{{atom("p")}, {atom("q")}});
	}

	SECTION("empty program")
	{
		CHECK(programModels("", domain) == std::vector<Interpretation>{{}});
	}

	SECTION("odd negative loop")
	{
		CHECK(programModels("p :- not p.", domain).empty());
	}

	SECTION("constraints")
	{
		CHECK(programModels("{p}. {q}. :- p, q. :- not p, not q.", domain)
			== std::vector<Interpretation>{{atom("p")}, {atom("q")}});
	}

	SECTION("positive loops are unfounded")
	{
		CHECK(programModels("p :- q. q :- p. {r}.", domain) == std::vector<Interpretation>{{}, {atom("r")}});
	}

	SECTION("budget")
	{
		CHECK_THROWS_AS(programModels("{p(1..30)}.", Domain::make({}, 1, 30)), BudgetError);
	}
}

TEST_CASE("[oracle] Stable models agree with the reduct definition", "[oracle]")
{
	test::Random random(5);

	for (int i = 0; i < 300; i++)
	{
		const auto program = test::randomGroundProgram(random, 1 + i % 10, 1 + i % 8);
		CHECK(stableModels(program) == test::naiveStableModels(program));
	}
}

TEST_CASE("[oracle] Tightness", "[oracle]")
{
	const auto tight =
		[](const std::string &source, const Domain &domain)
		{
			return isTight(ground(parseProgram(source), domain, {}, false));
		};

	CHECK(!tight("p :- q. q :- p. q.", Domain{}));
	CHECK(tight("s(X) :- p(X). s(X) :- q(X). p(a). q(a).", Domain::make({"a"}, 0, -1)));
	CHECK(tight("", Domain{}));
	CHECK(tight("p :- not p.", Domain{}));
	CHECK(!tight("{p}. p :- p.", Domain{}));

	CHECK(!tight("p :- p.", Domain{}));
	CHECK(isTight(ground(parseProgram("p :- p."), Domain{}, {})));

	const auto cycle = findPositiveCycle(ground(parseProgram("{a}. b :- a, c. c :- b."), Domain{}, {}, false));

	REQUIRE(cycle);
	CHECK(cycle->front() == cycle->back());
	CHECK(cycle->size() == 3);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[oracle] Evaluation", "[oracle]")
{
	const auto domain = Domain::make({"a", "b"}, 0, 5);

	SECTION("definitions")
	{
		const auto formula = readFormula("forall V1 (p(V1) <-> V1 = a)");

		CHECK(evaluate(formula, {atom("p", {symbol("a")})}, domain));
		CHECK(!evaluate(formula, {}, domain));
		CHECK(!evaluate(formula, {atom("p", {symbol("a")}), atom("p", {symbol("b")})}, domain));
	}

	SECTION("integer quantifiers range over integers")
	{
		const auto formula = readFormula("exists N1 p(N1)");

		CHECK(!evaluate(formula, {atom("p", {symbol("a")})}, domain));
		CHECK(evaluate(formula, {atom("p", {integer(3)})}, domain));
		CHECK(evaluate(readFormula("exists X p(X)"), {atom("p", {symbol("a")})}, domain));
	}

	SECTION("membership and comparisons")
	{
		CHECK(evaluate(readFormula("exists N1 (N1 in 2..4 and N1 > 3)"), {}, domain));
		CHECK(!evaluate(readFormula("exists N1 (N1 in 2..4 and N1 > 4)"), {}, domain));
		CHECK(evaluate(readFormula("3 < a"), {}, domain));
		CHECK(evaluate(readFormula("a < b"), {}, domain));
		CHECK(!evaluate(readFormula("exists U1 U1 in (3 / 0)"), {}, domain));
	}

	SECTION("atoms outside of the domain are false")
	{
		CHECK(!evaluate(readFormula("p(7)"), {atom("p", {integer(7)})}, domain));
		CHECK(evaluate(readFormula("forall N1 not p((N1 + 10))"), {}, domain));
	}

	SECTION("three-valued evaluation")
	{
		const AtomTruth unknownP =
			[](const GroundAtom &atom)
			{
				return atom.predicate == "p" ? Truth::Unknown : Truth::False;
			};

		CHECK(evaluate(readFormula("(p or q)"), domain, unknownP) == Truth::Unknown);
		CHECK(evaluate(readFormula("(p and q)"), domain, unknownP) == Truth::False);
		CHECK(evaluate(readFormula("(q -> p)"), domain, unknownP) == Truth::True);
		CHECK(evaluate(readFormula("(p <-> q)"), domain, unknownP) == Truth::Unknown);
	}
}

TEST_CASE("[oracle] Evaluation respects alpha-equivalence", "[oracle]")
{
	test::Random random(11);
	const auto domain = test::randomFormulaDomain();

	for (int i = 0; i < 200; i++)
	{
		const auto formula = test::randomFormula(random);
		const auto renamed = fol::freshenBoundVariables(formula);
		const auto interpretation = test::randomInterpretation(random, test::randomFormulaSignature(), domain);

		REQUIRE(fol::alphaEquivalent(formula, renamed));
		CHECK(evaluate(formula, interpretation, domain) == evaluate(renamed, interpretation, domain));
	}
}

TEST_CASE("[oracle] Formula models", "[oracle]")
{
	const auto domain = Domain::make({"a", "b"}, 0, -1);

	const auto models = formulaModels({readFormula("forall V1 (p(V1) -> V1 = a)"), readFormula("(r <-> not exists U1 p(U1))")},
		domain, {}, {});

	CHECK(models == std::vector<Interpretation>{{atom("p", {symbol("a")})}, {atom("r")}});
}

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[oracle] Reading printed formulas", "[oracle]")
{
	const std::string names[] = {"example1", "example2", "example3", "example4", "example5", "example6", "example7"};

	for (const auto &name : names)
	{
		const auto output = translate(parseProgram(test::readFile(test::corpusPath(name + ".lp"))));
		const auto text = output.text();
		const auto read = readFormulas(text);

		REQUIRE(read.formulas.size() == output.formulas.size());
		CHECK(read.annotations == output.annotations);

		for (std::size_t i = 0; i < read.formulas.size(); i++)
			CHECK(fol::alphaEquivalent(read.formulas[i], output.formulas[i]));

		TranslationOutput reprinted;
		reprinted.formulas = read.formulas;
		reprinted.annotations = read.annotations;
		CHECK(reprinted.text() == text);
	}

	CHECK_THROWS_AS(readFormula("forall V1 (p(V1) <->"), ParseError);
	CHECK(formatFormula(readFormula("in(1, 2)")) == "in(1, 2)");
	CHECK(formatFormula(readFormula("(N1 * 2) = 4")) == "(N1 * 2) = 4");
}

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[oracle] Correspondence", "[oracle]")
{
	SECTION("definitions over all external inputs")
	{
		const auto program = parseProgram(test::readFile(test::corpusPath("example1.lp")));
		const auto domain = Domain::make({"a", "b"}, 0, -1);
		const auto inputs = enumerateExternalInputs(program, domain);

		CHECK(inputs.size() == 16);

		for (const auto &input : inputs)
			CHECK(checkCorrespondence(program, domain, input).holds());
	}

	SECTION("primes")
	{
		const auto program = parseProgram(test::readFile(test::corpusPath("example6.lp")));
		const auto report = checkCorrespondence(program, defaultDomain(substituteConstants(program, {{"n", 10}})), {},
			{{"n", 10}});

		REQUIRE(report.holds());
		REQUIRE(report.stableModels.size() == 1);

		Interpretation primes;

		for (const auto value : {2, 3, 5, 7})
			primes.insert(atom("prime", {integer(value)}));

		CHECK(report.stableModels.front() == primes);
	}

	SECTION("wrong theories are detected")
	{
		const auto program = parseProgram("p(a). {q(a)}.");
		const auto domain = Domain::make({"a"}, 0, -1);

		CHECK(!checkCorrespondence(program, {readFormula("forall V1 (p(V1) <-> V1 = a)"), readFormula("forall V1 (q(V1) <-> V1 = a)")},
			{}, domain, {}).holds());
	}

	SECTION("non-tight programs")
	{
		const auto report = checkCorrespondence(parseProgram("p :- p."), Domain{}, {});

		CHECK(report.verdict == CorrespondenceReport::Verdict::NotTight);
		CHECK(report.cycle == std::vector<GroundAtom>{atom("p"), atom("p")});
	}

	SECTION("default domains widen the integers of the program")
	{
		const auto domain = defaultDomain(parseProgram("p(1..3, a)."), {atom("e", {symbol("z")})});

		CHECK(domain.values == Domain::make({"a", "z"}, -1, 5).values);
	}
}
