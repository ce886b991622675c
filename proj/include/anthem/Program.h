#ifndef __ANTHEM__PROGRAM_H
#define __ANTHEM__PROGRAM_H

#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <anthem/Common.h>

namespace anthem
{
namespace ast
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Program
//
// Abstract syntax of the supported gringo fragment
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct TermNode;

class Term;

struct Integer
{
	std::int64_t value;

	bool operator==(const Integer &other) const = default;
};

struct Symbol
{
	std::string name;

	bool operator==(const Symbol &other) const = default;
};

struct Variable
{
	std::string name;

	bool operator==(const Variable &other) const = default;
};

// Each source occurrence of “_” gets its own index, so that distinct occurrences never compare equal
struct Anonymous
{
	std::size_t index;

	bool operator==(const Anonymous &other) const = default;
};

struct BinaryOperation;

class Term
{
	public:
		using Variant = std::variant<Integer, Symbol, Variable, Anonymous, BinaryOperation>;

		Term(Integer integer);
		Term(Symbol symbol);
		Term(Variable variable);
		Term(Anonymous anonymous);
		Term(BinaryOperation binaryOperation);

		const Variant &variant() const;

		template<class T>
		const T *as() const;

		template<class T>
		bool is() const;

		bool operator==(const Term &other) const;

	private:
		std::shared_ptr<const TermNode> m_node;
};

struct BinaryOperation
{
	BinaryOperator binaryOperator;
	Term left;
	Term right;

	bool operator==(const BinaryOperation &other) const = default;
};

struct TermNode
{
	Term::Variant value;
};

template<class T>
const T *Term::as() const
{
	return std::get_if<T>(&variant());
}

template<class T>
bool Term::is() const
{
	return as<T>() != nullptr;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

struct Atom
{
	std::string predicate;
	std::vector<Term> arguments;

	PredicateSignature signature() const
	{
		return {predicate, arguments.size()};
	}

	bool operator==(const Atom &other) const = default;
};

struct PositiveLiteral
{
	Atom atom;

	bool operator==(const PositiveLiteral &other) const = default;
};

struct NegativeLiteral
{
	Atom atom;

	bool operator==(const NegativeLiteral &other) const = default;
};

struct Comparison
{
	ComparisonOperator comparisonOperator;
	Term left;
	Term right;

	bool operator==(const Comparison &other) const = default;
};

using BodyLiteral = std::variant<PositiveLiteral, NegativeLiteral, Comparison>;

////////////////////////////////////////////////////////////////////////////////////////////////////

struct BasicHead
{
	Atom atom;

	bool operator==(const BasicHead &other) const = default;
};

struct ChoiceHead
{
	Atom atom;

	bool operator==(const ChoiceHead &other) const = default;
};

// Integrity constraints have no head
struct NoHead
{
	bool operator==(const NoHead &other) const = default;
};

using Head = std::variant<BasicHead, ChoiceHead, NoHead>;

struct Rule
{
	Head head;
	std::vector<BodyLiteral> body;
	Location location;

	// Locations are not part of the structure
	bool operator==(const Rule &other) const
	{
		return head == other.head && body == other.body;
	}
};

////////////////////////////////////////////////////////////////////////////////////////////////////

struct Program
{
	std::vector<Rule> rules;
	std::set<PredicateSignature> shows;
	std::set<PredicateSignature> externals;
	// Distinguishes “no #show directive” (show everything) from “#show directives listing nothing”
	bool hasShowDirective = false;

	bool operator==(const Program &other) const = default;
};

////////////////////////////////////////////////////////////////////////////////////////////////////

const Atom *headAtom(const Rule &rule);

// Named variables of a rule in order of first occurrence (head first, then body)
std::vector<std::string> variablesInOrder(const Rule &rule);

void collectVariables(const Term &term, std::vector<std::string> &variables);

// Predicates in order of first occurrence, heads and bodies alike
std::vector<PredicateSignature> predicatesInOrder(const Program &program);

// Appends the rules and directives of another program (used when reading several files)
void append(Program &program, Program &&other);

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string format(const Term &term);
std::string format(const Atom &atom);
std::string format(const BodyLiteral &literal);
std::string format(const Rule &rule);
std::string format(const Program &program);

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
