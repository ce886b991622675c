#include <anthem/Values.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Values
//
////////////////////////////////////////////////////////////////////////////////////////////////////

Value Value::integer(std::int64_t value)
{
	Value result;
	result.m_value = value;
	return result;
}

Value Value::symbol(std::string name)
{
	Value result;
	result.m_value = std::move(name);
	return result;
}

std::string toString(const Value &value)
{
	return value.isInteger() ? std::to_string(value.integer()) : value.symbol();
}

////////////////////////////////////////////////////////////////////////////////////////////////////

ValueSet::ValueSet(std::set<Value> values)
:	m_values{std::move(values)}
{
}

ValueSet ValueSet::empty()
{
	return {};
}

ValueSet ValueSet::singleton(Value value)
{
	return ValueSet(std::set<Value>{std::move(value)});
}

ValueSet ValueSet::range(std::int64_t lower, std::int64_t upper)
{
	ValueSet result;

	if (lower <= upper)
		result.m_range = Range{lower, upper};

	return result;
}

ValueSet::Kind ValueSet::kind() const
{
	if (m_range)
		return Kind::IntegerRange;

	return m_values.empty() ? Kind::Empty : Kind::Finite;
}

bool ValueSet::isEmpty() const
{
	return kind() == Kind::Empty;
}

std::size_t ValueSet::size() const
{
	if (m_range)
	{
		// Unsigned subtraction is exact for nonempty ranges
		const auto difference = static_cast<std::uint64_t>(m_range->upper) - static_cast<std::uint64_t>(m_range->lower);

		return difference >= std::numeric_limits<std::size_t>::max()
			? std::numeric_limits<std::size_t>::max()
			: static_cast<std::size_t>(difference + 1);
	}

	return m_values.size();
}

bool ValueSet::contains(const Value &value) const
{
	if (m_range)
		return value.isInteger() && m_range->lower <= value.integer() && value.integer() <= m_range->upper;

	return m_values.contains(value);
}

std::optional<Value> ValueSet::single() const
{
	if (size() != 1)
		return std::nullopt;

	if (m_range)
		return Value::integer(m_range->lower);

	return *m_values.begin();
}

std::set<Value> ValueSet::elements() const
{
	if (!m_range)
		return m_values;

	if (size() > MaximumSize)
		throw std::length_error("value set too large to enumerate");

	std::set<Value> result;

	for (auto value = m_range->lower; ; value++)
	{
		result.insert(result.end(), Value::integer(value));

		if (value == m_range->upper)
			break;
	}

	return result;
}

bool ValueSet::operator==(const ValueSet &other) const
{
	if (m_range && other.m_range)
		return m_range->lower == other.m_range->lower && m_range->upper == other.m_range->upper;

	if (size() != other.size())
		return false;

	return elements() == other.elements();
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::optional<std::int64_t> applyToIntegers(BinaryOperator binaryOperator, std::int64_t left, std::int64_t right)
{
	std::int64_t result = 0;

	switch (binaryOperator)
	{
		case BinaryOperator::Plus:
			if (__builtin_add_overflow(left, right, &result))
				return std::nullopt;
			return result;
		case BinaryOperator::Minus:
			if (__builtin_sub_overflow(left, right, &result))
				return std::nullopt;
			return result;
		case BinaryOperator::Multiplication:
			if (__builtin_mul_overflow(left, right, &result))
				return std::nullopt;
			return result;
		case BinaryOperator::Division:
			if (right == 0 || (left == std::numeric_limits<std::int64_t>::min() && right == -1))
				return std::nullopt;
			// Truncates toward zero
			return left / right;
		case BinaryOperator::Interval:
			break;
	}

	return std::nullopt;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

struct IntegerBounds
{
	std::int64_t minimum;
	std::int64_t maximum;
};

std::optional<IntegerBounds> integerBounds(const ValueSet &valueSet, const std::set<Value> *elements)
{
	if (valueSet.kind() == ValueSet::Kind::IntegerRange)
	{
		const auto all = valueSet.elements();
		return IntegerBounds{all.begin()->integer(), all.rbegin()->integer()};
	}

	std::optional<IntegerBounds> bounds;

	for (const auto &value : *elements)
	{
		if (!value.isInteger())
			continue;

		if (!bounds)
			bounds = IntegerBounds{value.integer(), value.integer()};
		else
		{
			bounds->minimum = std::min(bounds->minimum, value.integer());
			bounds->maximum = std::max(bounds->maximum, value.integer());
		}
	}

	return bounds;
}

}

ValueSet apply(BinaryOperator binaryOperator, const ValueSet &left, const ValueSet &right)
{
	if (left.isEmpty() || right.isEmpty())
		return ValueSet::empty();

	// Contiguous ranges allow closed-form results without enumerating
	if (left.m_range && right.m_range)
	{
		const auto &l = *left.m_range;
		const auto &r = *right.m_range;

		switch (binaryOperator)
		{
			case BinaryOperator::Interval:
				return ValueSet::range(l.lower, r.upper);
			case BinaryOperator::Plus:
			{
				const auto lower = applyToIntegers(BinaryOperator::Plus, l.lower, r.lower);
				const auto upper = applyToIntegers(BinaryOperator::Plus, l.upper, r.upper);

				if (lower && upper)
					return ValueSet::range(*lower, *upper);

				break;
			}
			case BinaryOperator::Minus:
			{
				const auto lower = applyToIntegers(BinaryOperator::Minus, l.lower, r.upper);
				const auto upper = applyToIntegers(BinaryOperator::Minus, l.upper, r.lower);

				if (lower && upper)
					return ValueSet::range(*lower, *upper);

				break;
			}
			default:
				break;
		}
	}

	// The union of [a, b] over all pairs is [min a, max b] whenever that is nonempty
	if (binaryOperator == BinaryOperator::Interval)
	{
		std::set<Value> leftElements;
		std::set<Value> rightElements;

		if (!left.m_range)
			leftElements = left.elements();

		if (!right.m_range)
			rightElements = right.elements();

		const auto leftBounds = integerBounds(left, &leftElements);
		const auto rightBounds = integerBounds(right, &rightElements);

		if (!leftBounds || !rightBounds)
			return ValueSet::empty();

		return ValueSet::range(leftBounds->minimum, rightBounds->maximum);
	}

	const auto leftElements = left.elements();
	const auto rightElements = right.elements();

	std::set<Value> result;

	for (const auto &leftValue : leftElements)
	{
		if (!leftValue.isInteger())
			continue;

		for (const auto &rightValue : rightElements)
		{
			if (!rightValue.isInteger())
				continue;

			if (const auto value = applyToIntegers(binaryOperator, leftValue.integer(), rightValue.integer()))
				result.insert(Value::integer(*value));
		}

		if (result.size() > ValueSet::MaximumSize)
			throw std::length_error("value set too large to enumerate");
	}

	return ValueSet(std::move(result));
}

////////////////////////////////////////////////////////////////////////////////////////////////////

ValueSet values(const ast::Term &term)
{
	return std::visit(
		[](const auto &term) -> ValueSet
		{
			using T = std::decay_t<decltype(term)>;

			if constexpr (std::is_same_v<T, ast::Integer>)
				return ValueSet::singleton(Value::integer(term.value));
			else if constexpr (std::is_same_v<T, ast::Symbol>)
				return ValueSet::singleton(Value::symbol(term.name));
			else if constexpr (std::is_same_v<T, ast::BinaryOperation>)
				return apply(term.binaryOperator, values(term.left), values(term.right));
			else
				throw LogicError("values of a nonground term are undefined");
		}, term.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
