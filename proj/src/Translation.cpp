#include <anthem/Translation.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Translation
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

// Each occurrence of “_” is bound by the literal it appears in
using AnonymousMap = std::map<std::size_t, fol::Variable>;

fol::Term translateTermStructure(const ast::Term &term, const VariableMap &variables, AnonymousMap *anonymous)
{
	return std::visit(
		[&](const auto &term) -> fol::Term
		{
			using T = std::decay_t<decltype(term)>;

			if constexpr (std::is_same_v<T, ast::Integer>)
				return fol::IntegerConstant{term.value};
			else if constexpr (std::is_same_v<T, ast::Symbol>)
				return fol::SymbolicConstant{term.name};
			else if constexpr (std::is_same_v<T, ast::Variable>)
			{
				const auto match = variables.find(term.name);

				if (match == variables.end())
					throw LogicError("unmapped variable “" + term.name + "”");

				return match->second;
			}
			else if constexpr (std::is_same_v<T, ast::Anonymous>)
			{
				if (!anonymous)
					throw LogicError("anonymous variable in unsupported position");

				auto match = anonymous->find(term.index);

				if (match == anonymous->end())
					match = anonymous->emplace(term.index, fol::Variable::fresh()).first;

				return match->second;
			}
			else
				return fol::SetOperation{term.binaryOperator,
					translateTermStructure(term.left, variables, anonymous),
					translateTermStructure(term.right, variables, anonymous)};
		}, term.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

// Collects the bindings needed to use a term as a single-valued argument
struct ArgumentTranslation
{
	std::vector<fol::Term> arguments;
	std::vector<fol::Variable> auxiliaryVariables;
	std::vector<fol::Formula> bindings;
	AnonymousMap anonymous;

	void add(const ast::Term &term, const VariableMap &variables)
	{
		auto image = translateTermStructure(term, variables, &anonymous);

		if (fol::isSingleValued(image))
		{
			arguments.push_back(std::move(image));
			return;
		}

		const auto auxiliary = fol::Variable::fresh();
		auxiliaryVariables.push_back(auxiliary);
		bindings.push_back(fol::In{auxiliary, std::move(image)});
		arguments.push_back(auxiliary);
	}

	std::vector<fol::Variable> anonymousVariables() const
	{
		std::vector<fol::Variable> result;
		result.reserve(anonymous.size());

		for (const auto &[index, variable] : anonymous)
			result.push_back(variable);

		return result;
	}
};

}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Term translateTermStructure(const ast::Term &term, const VariableMap &variables)
{
	return translateTermStructure(term, variables, nullptr);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula translateTerm(const ast::Term &term, const fol::Variable &target, const VariableMap &variables)
{
	auto image = translateTermStructure(term, variables, nullptr);

	if (fol::isSingleValued(image))
		return fol::Comparison{ComparisonOperator::Equal, target, std::move(image)};

	return fol::In{target, std::move(image)};
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula translateLiteral(const ast::BodyLiteral &literal, const VariableMap &variables)
{
	const auto translateAtom =
		[&](const ast::Atom &atom, bool isNegated) -> fol::Formula
		{
			ArgumentTranslation translation;

			for (const auto &argument : atom.arguments)
				translation.add(argument, variables);

			fol::Formula predicate = fol::Predicate{atom.predicate, translation.arguments};
			auto conjuncts = translation.bindings;

			// Anonymous variables are projected away inside the negation
			if (isNegated)
				conjuncts.push_back(fol::Not{fol::makeExists(translation.anonymousVariables(), std::move(predicate))});
			else
			{
				auto &auxiliaryVariables = translation.auxiliaryVariables;
				const auto anonymousVariables = translation.anonymousVariables();
				auxiliaryVariables.insert(auxiliaryVariables.end(), anonymousVariables.begin(), anonymousVariables.end());
				conjuncts.push_back(std::move(predicate));
			}

			return fol::makeExists(translation.auxiliaryVariables, fol::makeAnd(std::move(conjuncts)));
		};

	return std::visit(
		[&](const auto &literal) -> fol::Formula
		{
			using T = std::decay_t<decltype(literal)>;

			if constexpr (std::is_same_v<T, ast::PositiveLiteral>)
				return translateAtom(literal.atom, false);
			else if constexpr (std::is_same_v<T, ast::NegativeLiteral>)
				return translateAtom(literal.atom, true);
			else
			{
				auto left = translateTermStructure(literal.left, variables, nullptr);
				auto right = translateTermStructure(literal.right, variables, nullptr);

				// “X = t” with a multi-valued t is a membership atom
				if (literal.comparisonOperator == ComparisonOperator::Equal)
				{
					const auto isLeftSingleValued = fol::isSingleValued(left);
					const auto isRightSingleValued = fol::isSingleValued(right);

					if (isLeftSingleValued && !isRightSingleValued)
						return fol::In{std::move(left), std::move(right)};

					if (!isLeftSingleValued && isRightSingleValued)
						return fol::In{std::move(right), std::move(left)};
				}

				ArgumentTranslation translation;
				translation.add(literal.left, variables);
				translation.add(literal.right, variables);

				auto conjuncts = translation.bindings;
				conjuncts.push_back(fol::Comparison{literal.comparisonOperator, translation.arguments[0],
					translation.arguments[1]});

				return fol::makeExists(translation.auxiliaryVariables, fol::makeAnd(std::move(conjuncts)));
			}
		}, literal);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

RuleFormula translateRule(const ast::Rule &rule)
{
	RuleFormula result{RuleFormula::Kind::Constraint, {}, {}, fol::makeTrue(), rule.location};

	VariableMap variables;
	const auto *head = ast::headAtom(rule);

	if (head)
	{
		result.kind = std::holds_alternative<ast::ChoiceHead>(rule.head)
			? RuleFormula::Kind::Choice
			: RuleFormula::Kind::Definite;
		result.predicate = head->signature();

		// A head argument that is a variable seen for the first time is identified with its head variable
		for (const auto &argument : head->arguments)
		{
			const auto headVariable = fol::Variable::fresh(fol::Sort::General, fol::VariableRole::Head);
			result.headVariables.push_back(headVariable);

			if (const auto *variable = argument.as<ast::Variable>())
				variables.emplace(variable->name, headVariable);
		}
	}

	std::vector<fol::Variable> bodyVariables;

	for (const auto &name : ast::variablesInOrder(rule))
	{
		if (variables.contains(name))
			continue;

		const auto variable = fol::Variable::fresh();
		variables.emplace(name, variable);
		bodyVariables.push_back(variable);
	}

	std::vector<fol::Formula> conjuncts;

	if (head)
		for (std::size_t i = 0; i < head->arguments.size(); i++)
		{
			const auto &argument = head->arguments[i];
			const auto &headVariable = result.headVariables[i];

			if (const auto *variable = argument.as<ast::Variable>();
				variable && variables.at(variable->name) == headVariable)
			{
				continue;
			}

			conjuncts.push_back(translateTerm(argument, headVariable, variables));
		}

	for (const auto &literal : rule.body)
		conjuncts.push_back(translateLiteral(literal, variables));

	result.body = fol::makeExists(std::move(bodyVariables), fol::makeAnd(std::move(conjuncts)));

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<RuleFormula> translateProgram(const ast::Program &program)
{
	std::vector<RuleFormula> result;
	result.reserve(program.rules.size());

	for (const auto &rule : program.rules)
		result.push_back(translateRule(rule));

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula ruleFormulaToFormula(const RuleFormula &ruleFormula)
{
	if (ruleFormula.kind == RuleFormula::Kind::Constraint)
		return fol::Not{ruleFormula.body};

	std::vector<fol::Term> arguments(ruleFormula.headVariables.begin(), ruleFormula.headVariables.end());
	fol::Formula head = fol::Predicate{ruleFormula.predicate.name, std::move(arguments)};

	if (ruleFormula.kind == RuleFormula::Kind::Definite)
		return fol::makeForAll(ruleFormula.headVariables, fol::Implies{ruleFormula.body, std::move(head)});

	return fol::makeForAll(ruleFormula.headVariables, fol::Implies{std::move(head), ruleFormula.body});
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
