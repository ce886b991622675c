#include <anthem/Common.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Common
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string toString(const Location &location)
{
	return location.file + ":" + std::to_string(location.line) + ":" + std::to_string(location.column);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

ParseError::ParseError(Location location, const std::string &message)
:	Error(toString(location) + ": " + message),
	m_location{std::move(location)}
{
}

////////////////////////////////////////////////////////////////////////////////////////////////////

UnsupportedConstructError::UnsupportedConstructError(Location location, std::string construct)
:	ParseError(std::move(location), "unsupported construct: " + construct),
	m_construct{std::move(construct)}
{
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string toString(const PredicateSignature &signature)
{
	return signature.name + "/" + std::to_string(signature.arity);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

const char *toString(BinaryOperator binaryOperator)
{
	switch (binaryOperator)
	{
		case BinaryOperator::Plus:
			return "+";
		case BinaryOperator::Minus:
			return "-";
		case BinaryOperator::Multiplication:
			return "*";
		case BinaryOperator::Division:
			return "/";
		case BinaryOperator::Interval:
			return "..";
	}

	return "?";
}

////////////////////////////////////////////////////////////////////////////////////////////////////

const char *toString(ComparisonOperator comparisonOperator)
{
	switch (comparisonOperator)
	{
		case ComparisonOperator::Equal:
			return "=";
		case ComparisonOperator::NotEqual:
			return "!=";
		case ComparisonOperator::Less:
			return "<";
		case ComparisonOperator::LessEqual:
			return "<=";
		case ComparisonOperator::Greater:
			return ">";
		case ComparisonOperator::GreaterEqual:
			return ">=";
	}

	return "?";
}

////////////////////////////////////////////////////////////////////////////////////////////////////

ComparisonOperator complement(ComparisonOperator comparisonOperator)
{
	switch (comparisonOperator)
	{
		case ComparisonOperator::Equal:
			return ComparisonOperator::NotEqual;
		case ComparisonOperator::NotEqual:
			return ComparisonOperator::Equal;
		case ComparisonOperator::Less:
			return ComparisonOperator::GreaterEqual;
		case ComparisonOperator::LessEqual:
			return ComparisonOperator::Greater;
		case ComparisonOperator::Greater:
			return ComparisonOperator::LessEqual;
		case ComparisonOperator::GreaterEqual:
			return ComparisonOperator::Less;
	}

	return comparisonOperator;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
