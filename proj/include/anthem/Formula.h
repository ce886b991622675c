#ifndef __ANTHEM__FORMULA_H
#define __ANTHEM__FORMULA_H

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include <anthem/Common.h>

namespace anthem
{
namespace fol
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Formula
//
// Two-sorted first-order formulas. General variables range over all precomputed terms, integer
// variables over the integers. Set-valued terms (intervals, division, arithmetic over general
// variables) may only occur on the right-hand side of a membership atom “t in s”.
//
////////////////////////////////////////////////////////////////////////////////////////////////////

enum class Sort
{
	General,
	Integer,
};

// Decides the letter a variable is printed with (V for completed definition heads)
enum class VariableRole
{
	Head,
	Bound,
};

struct Variable
{
	std::uint64_t id;
	Sort sort = Sort::General;
	VariableRole role = VariableRole::Bound;

	static Variable fresh(Sort sort = Sort::General, VariableRole role = VariableRole::Bound);

	bool operator==(const Variable &other) const
	{
		return id == other.id;
	}

	auto operator<=>(const Variable &other) const
	{
		return id <=> other.id;
	}
};

struct SymbolicConstant
{
	std::string name;

	bool operator==(const SymbolicConstant &other) const = default;
};

struct IntegerConstant
{
	std::int64_t value;

	bool operator==(const IntegerConstant &other) const = default;
};

struct Arithmetic;
struct SetOperation;
struct TermNode;

class Term
{
	public:
		using Variant = std::variant<Variable, SymbolicConstant, IntegerConstant, Arithmetic, SetOperation>;

		Term(Variable variable);
		Term(SymbolicConstant symbolicConstant);
		Term(IntegerConstant integerConstant);
		Term(Arithmetic arithmetic);
		Term(SetOperation setOperation);

		const Variant &variant() const;

		template<class T>
		const T *as() const;

		template<class T>
		bool is() const;

		bool operator==(const Term &other) const;

	private:
		std::shared_ptr<const TermNode> m_node;
};

// Single-valued integer arithmetic (+, -, *) over integer variables and integer constants
struct Arithmetic
{
	BinaryOperator binaryOperator;
	Term left;
	Term right;

	bool operator==(const Arithmetic &other) const = default;
};

// Possibly multi-valued operation (.., /, and +, -, * over general operands)
struct SetOperation
{
	BinaryOperator binaryOperator;
	Term left;
	Term right;

	bool operator==(const SetOperation &other) const = default;
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

struct Boolean;
struct Predicate;
struct Comparison;
struct In;
struct Not;
struct And;
struct Or;
struct Implies;
struct Biconditional;
struct ForAll;
struct Exists;
struct FormulaNode;

class Formula
{
	public:
		using Variant = std::variant<Boolean, Predicate, Comparison, In, Not, And, Or, Implies,
			Biconditional, ForAll, Exists>;

		Formula(Boolean boolean);
		Formula(Predicate predicate);
		Formula(Comparison comparison);
		Formula(In in);
		Formula(Not not_);
		Formula(And and_);
		Formula(Or or_);
		Formula(Implies implies);
		Formula(Biconditional biconditional);
		Formula(ForAll forAll);
		Formula(Exists exists);

		const Variant &variant() const;

		template<class T>
		const T *as() const;

		template<class T>
		bool is() const;

		bool operator==(const Formula &other) const;

	private:
		std::shared_ptr<const FormulaNode> m_node;
};

struct Boolean
{
	bool value;

	bool operator==(const Boolean &other) const = default;
};

struct Predicate
{
	std::string name;
	std::vector<Term> arguments;

	PredicateSignature signature() const
	{
		return {name, arguments.size()};
	}

	bool operator==(const Predicate &other) const = default;
};

struct Comparison
{
	ComparisonOperator comparisonOperator;
	Term left;
	Term right;

	bool operator==(const Comparison &other) const = default;
};

// Membership “element in set”
struct In
{
	Term element;
	Term set;

	bool operator==(const In &other) const = default;
};

struct Not
{
	Formula argument;

	bool operator==(const Not &other) const = default;
};

struct And
{
	std::vector<Formula> arguments;

	bool operator==(const And &other) const = default;
};

struct Or
{
	std::vector<Formula> arguments;

	bool operator==(const Or &other) const = default;
};

struct Implies
{
	Formula antecedent;
	Formula consequent;

	bool operator==(const Implies &other) const = default;
};

struct Biconditional
{
	Formula left;
	Formula right;

	bool operator==(const Biconditional &other) const = default;
};

struct ForAll
{
	std::vector<Variable> variables;
	Formula argument;

	bool operator==(const ForAll &other) const = default;
};

struct Exists
{
	std::vector<Variable> variables;
	Formula argument;

	bool operator==(const Exists &other) const = default;
};

struct FormulaNode
{
	Formula::Variant value;
};

template<class T>
const T *Formula::as() const
{
	return std::get_if<T>(&variant());
}

template<class T>
bool Formula::is() const
{
	return as<T>() != nullptr;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
// Construction
////////////////////////////////////////////////////////////////////////////////////////////////////

Formula makeTrue();
Formula makeFalse();

// Flattens nested conjunctions; returns #true for no and the argument itself for one argument
Formula makeAnd(std::vector<Formula> arguments);
// Flattens nested disjunctions; returns #false for no and the argument itself for one argument
Formula makeOr(std::vector<Formula> arguments);
// Returns the argument itself for an empty variable list
Formula makeForAll(std::vector<Variable> variables, Formula argument);
Formula makeExists(std::vector<Variable> variables, Formula argument);

////////////////////////////////////////////////////////////////////////////////////////////////////
// Analysis
////////////////////////////////////////////////////////////////////////////////////////////////////

std::set<Variable> freeVariables(const Formula &formula);
std::set<Variable> variables(const Term &term);
// Free variables in order of first occurrence
std::vector<Variable> freeVariablesInOrder(const Formula &formula);

bool occursFree(const Variable &variable, const Formula &formula);
bool occurs(const Variable &variable, const Term &term);

// Variables, constants, and arithmetic over integer variables
bool isSingleValued(const Term &term);
// Integer constants, integer variables, and arithmetic over them
bool isIntegerValued(const Term &term);
bool containsSymbolicConstant(const Term &term);

std::set<PredicateSignature> predicates(const Formula &formula);
bool mentions(const Formula &formula, const PredicateSignature &signature);

// Checks that set-valued terms only occur to the right of “in”, that arithmetic only contains
// integer-valued operands, and that quantifier variable lists are nonempty and duplicate-free
bool satisfiesInvariants(const Formula &formula, std::string *reason = nullptr);

bool alphaEquivalent(const Formula &left, const Formula &right);

////////////////////////////////////////////////////////////////////////////////////////////////////
// Transformation
////////////////////////////////////////////////////////////////////////////////////////////////////

Term substitute(const Term &term, const std::map<Variable, Term> &replacements);

// Capture-avoiding substitution of free occurrences. Throws SortError when an integer variable
// would be replaced by a term that is not integer-valued.
Formula substitute(const Formula &formula, const Variable &variable, const Term &term);
Formula substitute(const Formula &formula, const std::map<Variable, Term> &replacements);

// Gives every bound variable a fresh identity
Formula freshenBoundVariables(const Formula &formula);

// Rebuilds the formula bottom-up, letting the callback replace predicate atoms
Formula replacePredicates(const Formula &formula,
	const std::function<std::optional<Formula>(const Predicate &)> &replacement);

////////////////////////////////////////////////////////////////////////////////////////////////////
// Integer annotations
////////////////////////////////////////////////////////////////////////////////////////////////////

// int(p/n@k): the k-th argument (1-based) of every tuple in p/n is an integer
struct IntegerAnnotation
{
	PredicateSignature predicate;
	std::size_t position;

	auto operator<=>(const IntegerAnnotation &other) const = default;
};

std::string format(const IntegerAnnotation &annotation);

// forall X1, ..., Xn (p(X1, ..., Xn) -> exists N (Xk = N))
Formula expandAnnotation(const IntegerAnnotation &annotation);

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
