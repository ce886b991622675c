#include <anthem/oracle/Interpretation.h>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Interpretation
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string toString(const GroundAtom &atom)
{
	std::string result = atom.predicate;

	if (atom.arguments.empty())
		return result;

	result += "(";

	for (std::size_t i = 0; i < atom.arguments.size(); i++)
	{
		if (i > 0)
			result += ", ";

		result += anthem::toString(atom.arguments[i]);
	}

	return result + ")";
}

std::string toString(const Interpretation &interpretation)
{
	std::string result = "{";

	for (auto atom = interpretation.begin(); atom != interpretation.end(); atom++)
	{
		if (atom != interpretation.begin())
			result += ", ";

		result += toString(*atom);
	}

	return result + "}";
}

Interpretation restrict(const Interpretation &interpretation, const std::set<PredicateSignature> &predicates)
{
	Interpretation result;

	for (const auto &atom : interpretation)
		if (predicates.contains(atom.signature()))
			result.insert(atom);

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

Domain Domain::make(const std::vector<std::string> &symbols, std::int64_t lower, std::int64_t upper)
{
	Domain domain;

	for (const auto &symbol : symbols)
		domain.values.insert(Value::symbol(symbol));

	for (auto value = lower; value <= upper; value++)
		domain.values.insert(Value::integer(value));

	return domain;
}

std::vector<Value> Domain::generalValues() const
{
	return {values.begin(), values.end()};
}

std::vector<Value> Domain::integerValues() const
{
	std::vector<Value> result;

	for (const auto &value : values)
		if (value.isInteger())
			result.push_back(value);

	return result;
}

bool Domain::contains(const Value &value) const
{
	return values.contains(value);
}

std::string toString(const Domain &domain)
{
	std::string result = "{";

	for (auto value = domain.values.begin(); value != domain.values.end(); value++)
	{
		if (value != domain.values.begin())
			result += ", ";

		result += anthem::toString(*value);
	}

	return result + "}";
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<std::vector<Value>> tuples(const std::vector<Value> &values, std::size_t arity)
{
	std::vector<std::vector<Value>> result{{}};

	for (std::size_t position = 0; position < arity; position++)
	{
		std::vector<std::vector<Value>> extended;
		extended.reserve(result.size() * values.size());

		for (const auto &prefix : result)
			for (const auto &value : values)
			{
				extended.push_back(prefix);
				extended.back().push_back(value);
			}

		result = std::move(extended);
	}

	return result;
}

std::vector<GroundAtom> groundAtoms(const PredicateSignature &predicate, const Domain &domain)
{
	std::vector<GroundAtom> result;

	for (auto &arguments : tuples(domain.generalValues(), predicate.arity))
		result.push_back({predicate.name, std::move(arguments)});

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

ast::Term substituteConstants(const ast::Term &term, const Constants &constants)
{
	if (const auto *symbol = term.as<ast::Symbol>())
	{
		const auto match = constants.find(symbol->name);

		if (match != constants.end())
			return ast::Integer{match->second};

		return term;
	}

	if (const auto *binaryOperation = term.as<ast::BinaryOperation>())
		return ast::BinaryOperation{binaryOperation->binaryOperator,
			substituteConstants(binaryOperation->left, constants),
			substituteConstants(binaryOperation->right, constants)};

	return term;
}

ast::Atom substituteConstants(const ast::Atom &atom, const Constants &constants)
{
	ast::Atom result{atom.predicate, {}};

	for (const auto &argument : atom.arguments)
		result.arguments.push_back(substituteConstants(argument, constants));

	return result;
}

fol::Term substituteConstants(const fol::Term &term, const Constants &constants)
{
	if (const auto *symbolicConstant = term.as<fol::SymbolicConstant>())
	{
		const auto match = constants.find(symbolicConstant->name);

		if (match != constants.end())
			return fol::IntegerConstant{match->second};

		return term;
	}

	if (const auto *arithmetic = term.as<fol::Arithmetic>())
		return fol::Arithmetic{arithmetic->binaryOperator, substituteConstants(arithmetic->left, constants),
			substituteConstants(arithmetic->right, constants)};

	if (const auto *setOperation = term.as<fol::SetOperation>())
		return fol::SetOperation{setOperation->binaryOperator, substituteConstants(setOperation->left, constants),
			substituteConstants(setOperation->right, constants)};

	return term;
}

}

ast::Program substituteConstants(const ast::Program &program, const Constants &constants)
{
	if (constants.empty())
		return program;

	auto result = program;

	for (auto &rule : result.rules)
	{
		std::visit(
			[&](auto &head)
			{
				using T = std::decay_t<decltype(head)>;

				if constexpr (!std::is_same_v<T, ast::NoHead>)
					head.atom = substituteConstants(head.atom, constants);
			}, rule.head);

		for (auto &literal : rule.body)
			std::visit(
				[&](auto &literal)
				{
					using T = std::decay_t<decltype(literal)>;

					if constexpr (std::is_same_v<T, ast::Comparison>)
					{
						literal.left = substituteConstants(literal.left, constants);
						literal.right = substituteConstants(literal.right, constants);
					}
					else
						literal.atom = substituteConstants(literal.atom, constants);
				}, literal);
	}

	return result;
}

fol::Formula substituteConstants(const fol::Formula &formula, const Constants &constants)
{
	if (constants.empty())
		return formula;

	return std::visit(
		[&](const auto &formula) -> fol::Formula
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, fol::Boolean>)
				return formula;
			else if constexpr (std::is_same_v<T, fol::Predicate>)
			{
				fol::Predicate result{formula.name, {}};

				for (const auto &argument : formula.arguments)
					result.arguments.push_back(substituteConstants(argument, constants));

				return result;
			}
			else if constexpr (std::is_same_v<T, fol::Comparison>)
				return fol::Comparison{formula.comparisonOperator, substituteConstants(formula.left, constants),
					substituteConstants(formula.right, constants)};
			else if constexpr (std::is_same_v<T, fol::In>)
				return fol::In{substituteConstants(formula.element, constants),
					substituteConstants(formula.set, constants)};
			else if constexpr (std::is_same_v<T, fol::Not>)
				return fol::Not{substituteConstants(formula.argument, constants)};
			else if constexpr (std::is_same_v<T, fol::And> || std::is_same_v<T, fol::Or>)
			{
				T result;

				for (const auto &argument : formula.arguments)
					result.arguments.push_back(substituteConstants(argument, constants));

				return result;
			}
			else if constexpr (std::is_same_v<T, fol::Implies>)
				return fol::Implies{substituteConstants(formula.antecedent, constants),
					substituteConstants(formula.consequent, constants)};
			else if constexpr (std::is_same_v<T, fol::Biconditional>)
				return fol::Biconditional{substituteConstants(formula.left, constants),
					substituteConstants(formula.right, constants)};
			else
				return T{formula.variables, substituteConstants(formula.argument, constants)};
		}, formula.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}
