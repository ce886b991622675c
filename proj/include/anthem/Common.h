#ifndef __ANTHEM__COMMON_H
#define __ANTHEM__COMMON_H

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Common
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct Location
{
	std::string file;
	std::size_t line = 0;
	std::size_t column = 0;
};

std::string toString(const Location &location);

////////////////////////////////////////////////////////////////////////////////////////////////////

class Error : public std::runtime_error
{
	public:
		using std::runtime_error::runtime_error;
};

// Malformed input text
class ParseError : public Error
{
	public:
		ParseError(Location location, const std::string &message);

		const Location &location() const
		{
			return m_location;
		}

	private:
		Location m_location;
};

// Input that is valid gringo but outside of the supported fragment
class UnsupportedConstructError : public ParseError
{
	public:
		UnsupportedConstructError(Location location, std::string construct);

		const std::string &construct() const
		{
			return m_construct;
		}

	private:
		std::string m_construct;
};

class SafetyError : public Error
{
	public:
		using Error::Error;
};

// Semantically ill-formed programs, such as external predicates defined by rules
class LogicError : public Error
{
	public:
		using Error::Error;
};

class SortError : public Error
{
	public:
		using Error::Error;
};

////////////////////////////////////////////////////////////////////////////////////////////////////

struct PredicateSignature
{
	std::string name;
	std::size_t arity = 0;

	auto operator<=>(const PredicateSignature &other) const = default;
};

// Formats as “name/arity”
std::string toString(const PredicateSignature &signature);

////////////////////////////////////////////////////////////////////////////////////////////////////

enum class BinaryOperator
{
	Plus,
	Minus,
	Multiplication,
	Division,
	Interval,
};

const char *toString(BinaryOperator binaryOperator);

enum class ComparisonOperator
{
	Equal,
	NotEqual,
	Less,
	LessEqual,
	Greater,
	GreaterEqual,
};

const char *toString(ComparisonOperator comparisonOperator);

// The operator o' such that “not (a o b)” is equivalent to “a o' b”
ComparisonOperator complement(ComparisonOperator comparisonOperator);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
