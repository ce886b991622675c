#include <catch2/catch_amalgamated.hpp>

#include <anthem/Parser.h>
#include <anthem/Values.h>

#include "../support/Generators.h"

using namespace anthem;

namespace
{

ValueSet termValues(const std::string &term)
{
	const auto program = parseProgram("p(" + term + ").");

	return values(std::get<ast::BasicHead>(program.rules.front().head).atom.arguments.front());
}

std::set<Value> integers(std::initializer_list<std::int64_t> values)
{
	std::set<Value> result;

	for (const auto value : values)
		result.insert(Value::integer(value));

	return result;
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

TEST_CASE("[values] Ground terms denote sets of values", "[values]")
{
	SECTION("the basic cases")
	{
		CHECK(termValues("1 + 3").elements() == integers({4}));
		CHECK(termValues("1..3").elements() == integers({1, 2, 3}));
		CHECK(termValues("3..1").isEmpty());
		CHECK(termValues("3 / (1 - 1)").isEmpty());
	}

	SECTION("constants")
	{
		CHECK(termValues("7").single() == Value::integer(7));
		CHECK(termValues("a").single() == Value::symbol("a"));
	}

	SECTION("operations distribute over multi-valued operands")
	{
		CHECK(termValues("(1..2) * (1..2)").elements() == integers({1, 2, 4}));
		CHECK(termValues("(1..3) + (1..3)").elements() == integers({2, 3, 4, 5, 6}));
		CHECK(termValues("(1..2)..(4..5)").elements() == integers({1, 2, 3, 4, 5}));
	}

	SECTION("division truncates towards zero")
	{
		CHECK(termValues("7 / 2").single() == Value::integer(3));
		CHECK(termValues("(0 - 7) / 2").single() == Value::integer(-3));
	}

	SECTION("arithmetic on symbols is undefined")
	{
		CHECK(termValues("a + 1").isEmpty());
		CHECK(termValues("1..a").isEmpty());
	}

	SECTION("overflow is undefined")
	{
		CHECK(termValues("9223372036854775807 + 1").isEmpty());
		CHECK(termValues("4611686018427387904 * 2").isEmpty());
	}

	SECTION("large ranges stay symbolic")
	{
		const auto set = termValues("1..10000000000");

		CHECK(set.kind() == ValueSet::Kind::IntegerRange);
		CHECK(set.size() == 10000000000u);
		CHECK(set.contains(Value::integer(123456789)));
		CHECK(!set.contains(Value::symbol("a")));
		CHECK_THROWS_AS(set.elements(), std::length_error);
	}

	SECTION("terms with variables have no values")
	{
		CHECK_THROWS_AS(values(ast::Variable{"X"}), LogicError);
	}
}

TEST_CASE("[values] Integers precede symbolic constants", "[values]")
{
	CHECK(Value::integer(1000) < Value::symbol("a"));
	CHECK(Value::integer(-1) < Value::integer(2));
	CHECK(Value::symbol("a") < Value::symbol("b"));
}

TEST_CASE("[values] Values agree with pairwise enumeration", "[values]")
{
	test::Random random(17);

	for (int i = 0; i < 500; i++)
	{
		const auto term = test::randomGroundTerm(random);
		INFO(ast::format(term));
		CHECK(values(term).elements() == test::naiveValues(term));
	}
}
