#ifndef __ANTHEM__VALUES_H
#define __ANTHEM__VALUES_H

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>

#include <anthem/Common.h>
#include <anthem/Program.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Values
//
// A ground gringo term stands for a finite set of values: “1 + 3” for {4}, “1..3” for {1, 2, 3},
// “3 / (1 - 1)” for the empty set.
//
////////////////////////////////////////////////////////////////////////////////////////////////////

// A precomputed term: an integer or a symbolic constant. Integers precede symbolic constants.
class Value
{
	public:
		static Value integer(std::int64_t value);
		static Value symbol(std::string name);

		bool isInteger() const
		{
			return std::holds_alternative<std::int64_t>(m_value);
		}

		std::int64_t integer() const
		{
			return std::get<std::int64_t>(m_value);
		}

		const std::string &symbol() const
		{
			return std::get<std::string>(m_value);
		}

		auto operator<=>(const Value &other) const = default;
		bool operator==(const Value &other) const = default;

	private:
		std::variant<std::int64_t, std::string> m_value;
};

std::string toString(const Value &value);

////////////////////////////////////////////////////////////////////////////////////////////////////

class ValueSet
{
	public:
		enum class Kind
		{
			Empty,
			Finite,
			IntegerRange,
		};

		// Upper bound on materialized sets
		static constexpr std::size_t MaximumSize = std::size_t{1} << 22;

		ValueSet() = default;
		explicit ValueSet(std::set<Value> values);

		static ValueSet empty();
		static ValueSet singleton(Value value);
		// All integers between lower and upper bound, inclusively; empty if lower > upper
		static ValueSet range(std::int64_t lower, std::int64_t upper);

		Kind kind() const;
		bool isEmpty() const;
		std::size_t size() const;
		bool contains(const Value &value) const;
		std::optional<Value> single() const;

		// Throws std::length_error beyond MaximumSize elements
		std::set<Value> elements() const;

		bool operator==(const ValueSet &other) const;

		friend ValueSet apply(BinaryOperator binaryOperator, const ValueSet &left, const ValueSet &right);

	private:
		struct Range
		{
			std::int64_t lower;
			std::int64_t upper;
		};

		std::set<Value> m_values;
		std::optional<Range> m_range;
};

// Applies an operator elementwise to all pairs of operand values and collects the defined results
ValueSet apply(BinaryOperator binaryOperator, const ValueSet &left, const ValueSet &right);

// The result of an operator on single values, if defined (integer operands, no division by zero,
// no overflow)
std::optional<std::int64_t> applyToIntegers(BinaryOperator binaryOperator, std::int64_t left, std::int64_t right);

// The values of a ground term. Throws LogicError if the term contains variables.
ValueSet values(const ast::Term &term);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
