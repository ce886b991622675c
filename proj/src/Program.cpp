#include <anthem/Program.h>

#include <algorithm>
#include <sstream>

namespace anthem
{
namespace ast
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Program
//
////////////////////////////////////////////////////////////////////////////////////////////////////

Term::Term(Integer integer)
:	m_node{std::make_shared<const TermNode>(TermNode{std::move(integer)})}
{
}

Term::Term(Symbol symbol)
:	m_node{std::make_shared<const TermNode>(TermNode{std::move(symbol)})}
{
}

Term::Term(Variable variable)
:	m_node{std::make_shared<const TermNode>(TermNode{std::move(variable)})}
{
}

Term::Term(Anonymous anonymous)
:	m_node{std::make_shared<const TermNode>(TermNode{std::move(anonymous)})}
{
}

Term::Term(BinaryOperation binaryOperation)
:	m_node{std::make_shared<const TermNode>(TermNode{std::move(binaryOperation)})}
{
}

////////////////////////////////////////////////////////////////////////////////////////////////////

const Term::Variant &Term::variant() const
{
	return m_node->value;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

bool Term::operator==(const Term &other) const
{
	return m_node == other.m_node || m_node->value == other.m_node->value;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

const Atom *headAtom(const Rule &rule)
{
	if (const auto *basicHead = std::get_if<BasicHead>(&rule.head))
		return &basicHead->atom;

	if (const auto *choiceHead = std::get_if<ChoiceHead>(&rule.head))
		return &choiceHead->atom;

	return nullptr;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

void collectVariables(const Term &term, std::vector<std::string> &variables)
{
	if (const auto *variable = term.as<Variable>())
	{
		if (std::find(variables.begin(), variables.end(), variable->name) == variables.end())
			variables.push_back(variable->name);
	}
	else if (const auto *binaryOperation = term.as<BinaryOperation>())
	{
		collectVariables(binaryOperation->left, variables);
		collectVariables(binaryOperation->right, variables);
	}
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<std::string> variablesInOrder(const Rule &rule)
{
	std::vector<std::string> variables;

	const auto collectAtom =
		[&](const Atom &atom)
		{
			for (const auto &argument : atom.arguments)
				collectVariables(argument, variables);
		};

	if (const auto *atom = headAtom(rule))
		collectAtom(*atom);

	for (const auto &literal : rule.body)
		std::visit(
			[&](const auto &literal)
			{
				using T = std::decay_t<decltype(literal)>;

				if constexpr (std::is_same_v<T, Comparison>)
				{
					collectVariables(literal.left, variables);
					collectVariables(literal.right, variables);
				}
				else
					collectAtom(literal.atom);
			}, literal);

	return variables;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<PredicateSignature> predicatesInOrder(const Program &program)
{
	std::vector<PredicateSignature> predicates;

	const auto add =
		[&](const Atom &atom)
		{
			const auto signature = atom.signature();

			if (std::find(predicates.begin(), predicates.end(), signature) == predicates.end())
				predicates.push_back(signature);
		};

	for (const auto &rule : program.rules)
	{
		if (const auto *atom = headAtom(rule))
			add(*atom);

		for (const auto &literal : rule.body)
		{
			if (const auto *positiveLiteral = std::get_if<PositiveLiteral>(&literal))
				add(positiveLiteral->atom);
			else if (const auto *negativeLiteral = std::get_if<NegativeLiteral>(&literal))
				add(negativeLiteral->atom);
		}
	}

	return predicates;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

void append(Program &program, Program &&other)
{
	std::move(other.rules.begin(), other.rules.end(), std::back_inserter(program.rules));
	program.shows.merge(other.shows);
	program.externals.merge(other.externals);
	program.hasShowDirective = program.hasShowDirective || other.hasShowDirective;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

int precedence(BinaryOperator binaryOperator)
{
	switch (binaryOperator)
	{
		case BinaryOperator::Interval:
			return 1;
		case BinaryOperator::Plus:
		case BinaryOperator::Minus:
			return 2;
		case BinaryOperator::Multiplication:
		case BinaryOperator::Division:
			return 3;
	}

	return 0;
}

void print(std::ostream &stream, const Term &term, int parentPrecedence, bool isRightOperand)
{
	std::visit(
		[&](const auto &term)
		{
			using T = std::decay_t<decltype(term)>;

			if constexpr (std::is_same_v<T, Integer>)
			{
				// Negative values can only be written as differences
				if (term.value < 0)
					stream << "(0 - " << -term.value << ")";
				else
					stream << term.value;
			}
			else if constexpr (std::is_same_v<T, Symbol>)
				stream << term.name;
			else if constexpr (std::is_same_v<T, Variable>)
				stream << term.name;
			else if constexpr (std::is_same_v<T, Anonymous>)
				stream << "_";
			else
			{
				const auto ownPrecedence = precedence(term.binaryOperator);
				const auto needsParentheses = ownPrecedence < parentPrecedence
					|| (ownPrecedence == parentPrecedence && (isRightOperand || ownPrecedence == 1));

				if (needsParentheses)
					stream << "(";

				print(stream, term.left, ownPrecedence, false);

				if (term.binaryOperator == BinaryOperator::Interval)
					stream << "..";
				else
					stream << " " << toString(term.binaryOperator) << " ";

				print(stream, term.right, ownPrecedence, true);

				if (needsParentheses)
					stream << ")";
			}
		}, term.variant());
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string format(const Term &term)
{
	std::stringstream stream;
	print(stream, term, 0, false);
	return stream.str();
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string format(const Atom &atom)
{
	std::string result = atom.predicate;

	if (atom.arguments.empty())
		return result;

	result += "(";

	for (std::size_t i = 0; i < atom.arguments.size(); i++)
	{
		if (i > 0)
			result += ", ";

		result += format(atom.arguments[i]);
	}

	return result + ")";
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string format(const BodyLiteral &literal)
{
	return std::visit(
		[](const auto &literal) -> std::string
		{
			using T = std::decay_t<decltype(literal)>;

			if constexpr (std::is_same_v<T, PositiveLiteral>)
				return format(literal.atom);
			else if constexpr (std::is_same_v<T, NegativeLiteral>)
				return "not " + format(literal.atom);
			else
				return format(literal.left) + " " + toString(literal.comparisonOperator) + " "
					+ format(literal.right);
		}, literal);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string format(const Rule &rule)
{
	std::string result;

	if (const auto *basicHead = std::get_if<BasicHead>(&rule.head))
		result = format(basicHead->atom);
	else if (const auto *choiceHead = std::get_if<ChoiceHead>(&rule.head))
		result = "{" + format(choiceHead->atom) + "}";

	if (!rule.body.empty())
	{
		result += result.empty() ? ":- " : " :- ";

		for (std::size_t i = 0; i < rule.body.size(); i++)
		{
			if (i > 0)
				result += ", ";

			result += format(rule.body[i]);
		}
	}
	else if (result.empty())
		result = ":-";

	return result + ".";
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string format(const Program &program)
{
	std::stringstream stream;

	for (const auto &rule : program.rules)
		stream << format(rule) << "\n";

	if (program.hasShowDirective && program.shows.empty())
		stream << "#show.\n";

	for (const auto &signature : program.shows)
		stream << "#show " << toString(signature) << ".\n";

	for (const auto &signature : program.externals)
	{
		stream << "#external " << signature.name;

		if (signature.arity > 0)
		{
			stream << "(";

			for (std::size_t i = 0; i < signature.arity; i++)
				stream << (i > 0 ? ", " : "") << "1";

			stream << ")";
		}

		stream << ".\n";
	}

	return stream.str();
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}
