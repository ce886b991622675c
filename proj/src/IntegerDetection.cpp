#include <anthem/IntegerDetection.h>

#include <algorithm>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Integer Detection
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

bool isVariable(const fol::Term &term, const fol::Variable &variable)
{
	const auto *other = term.as<fol::Variable>();
	return other && *other == variable;
}

// Set operations only ever have integer values
bool hasIntegerValuesOnly(const fol::Term &term)
{
	return term.is<fol::SetOperation>() || fol::isIntegerValued(term);
}

bool containsIntegerVariable(const fol::Term &term)
{
	const auto variables = fol::variables(term);

	return std::any_of(variables.begin(), variables.end(),
		[](const auto &variable){return variable.sort == fol::Sort::Integer;});
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

bool forcesInteger(const fol::Formula &formula, const fol::Variable &variable,
	const IntegerAnnotations &annotations)
{
	return std::visit(
		[&](const auto &formula) -> bool
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, fol::Boolean>)
				return !formula.value;
			else if constexpr (std::is_same_v<T, fol::Predicate>)
			{
				for (std::size_t i = 0; i < formula.arguments.size(); i++)
					if (isVariable(formula.arguments[i], variable)
						&& annotations.contains({formula.signature(), i + 1}))
					{
						return true;
					}

				return false;
			}
			else if constexpr (std::is_same_v<T, fol::Comparison>)
			{
				if (formula.comparisonOperator != ComparisonOperator::Equal)
					return false;

				return (isVariable(formula.left, variable) && fol::isIntegerValued(formula.right))
					|| (isVariable(formula.right, variable) && fol::isIntegerValued(formula.left));
			}
			else if constexpr (std::is_same_v<T, fol::In>)
				return isVariable(formula.element, variable) && hasIntegerValuesOnly(formula.set);
			else if constexpr (std::is_same_v<T, fol::And>)
				return std::any_of(formula.arguments.begin(), formula.arguments.end(),
					[&](const auto &argument){return forcesInteger(argument, variable, annotations);});
			else if constexpr (std::is_same_v<T, fol::Or>)
				return std::all_of(formula.arguments.begin(), formula.arguments.end(),
					[&](const auto &argument){return forcesInteger(argument, variable, annotations);});
			else if constexpr (std::is_same_v<T, fol::Exists>)
				return std::find(formula.variables.begin(), formula.variables.end(), variable)
						== formula.variables.end()
					&& forcesInteger(formula.argument, variable, annotations);
			else
				return false;
		}, formula.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

bool guardsInteger(const fol::Formula &formula, const fol::Variable &variable,
	const IntegerAnnotations &annotations)
{
	return std::visit(
		[&](const auto &formula) -> bool
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, fol::Boolean>)
				return formula.value;
			else if constexpr (std::is_same_v<T, fol::Comparison>)
			{
				// A non-integer differs from every integer
				if (formula.comparisonOperator != ComparisonOperator::NotEqual)
					return false;

				return (isVariable(formula.left, variable) && fol::isIntegerValued(formula.right))
					|| (isVariable(formula.right, variable) && fol::isIntegerValued(formula.left));
			}
			else if constexpr (std::is_same_v<T, fol::Not>)
				return forcesInteger(formula.argument, variable, annotations);
			else if constexpr (std::is_same_v<T, fol::Or>)
				return std::any_of(formula.arguments.begin(), formula.arguments.end(),
					[&](const auto &argument){return guardsInteger(argument, variable, annotations);});
			else if constexpr (std::is_same_v<T, fol::And>)
				return std::all_of(formula.arguments.begin(), formula.arguments.end(),
					[&](const auto &argument){return guardsInteger(argument, variable, annotations);});
			else if constexpr (std::is_same_v<T, fol::Implies>)
				return forcesInteger(formula.antecedent, variable, annotations)
					|| guardsInteger(formula.consequent, variable, annotations);
			else if constexpr (std::is_same_v<T, fol::ForAll>)
				return std::find(formula.variables.begin(), formula.variables.end(), variable)
						== formula.variables.end()
					&& guardsInteger(formula.argument, variable, annotations);
			else
				return false;
		}, formula.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula narrowVariables(const fol::Formula &formula, const IntegerAnnotations &annotations)
{
	return std::visit(
		[&](const auto &formula) -> fol::Formula
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, fol::Boolean> || std::is_same_v<T, fol::Predicate>
				|| std::is_same_v<T, fol::Comparison> || std::is_same_v<T, fol::In>)
			{
				return formula;
			}
			else if constexpr (std::is_same_v<T, fol::Not>)
				return fol::Not{narrowVariables(formula.argument, annotations)};
			else if constexpr (std::is_same_v<T, fol::And> || std::is_same_v<T, fol::Or>)
			{
				std::vector<fol::Formula> arguments;

				for (const auto &argument : formula.arguments)
					arguments.push_back(narrowVariables(argument, annotations));

				return T{std::move(arguments)};
			}
			else if constexpr (std::is_same_v<T, fol::Implies>)
				return fol::Implies{narrowVariables(formula.antecedent, annotations),
					narrowVariables(formula.consequent, annotations)};
			else if constexpr (std::is_same_v<T, fol::Biconditional>)
				return fol::Biconditional{narrowVariables(formula.left, annotations),
					narrowVariables(formula.right, annotations)};
			else
			{
				auto argument = narrowVariables(formula.argument, annotations);
				auto variables = formula.variables;

				for (auto &variable : variables)
				{
					if (variable.sort == fol::Sort::Integer)
						continue;

					const auto isNarrowable = std::is_same_v<T, fol::Exists>
						? forcesInteger(argument, variable, annotations)
						: guardsInteger(argument, variable, annotations);

					if (!isNarrowable)
						continue;

					const auto integerVariable = fol::Variable::fresh(fol::Sort::Integer, variable.role);
					argument = fol::substitute(argument, variable, integerVariable);
					variable = integerVariable;
				}

				return T{std::move(variables), std::move(argument)};
			}
		}, formula.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

fol::Term arithmetize(const fol::Term &term)
{
	const auto *setOperation = term.as<fol::SetOperation>();

	if (!setOperation)
		return term;

	auto left = arithmetize(setOperation->left);
	auto right = arithmetize(setOperation->right);

	const auto isArithmeticOperator = setOperation->binaryOperator == BinaryOperator::Plus
		|| setOperation->binaryOperator == BinaryOperator::Minus
		|| setOperation->binaryOperator == BinaryOperator::Multiplication;

	if (isArithmeticOperator && fol::isIntegerValued(left) && fol::isIntegerValued(right)
		&& (containsIntegerVariable(left) || containsIntegerVariable(right)))
	{
		return fol::Arithmetic{setOperation->binaryOperator, std::move(left), std::move(right)};
	}

	return fol::SetOperation{setOperation->binaryOperator, std::move(left), std::move(right)};
}

}

fol::Formula arithmetize(const fol::Formula &formula)
{
	return std::visit(
		[&](const auto &formula) -> fol::Formula
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, fol::Boolean>)
				return formula;
			else if constexpr (std::is_same_v<T, fol::Predicate>)
			{
				std::vector<fol::Term> arguments;

				for (const auto &argument : formula.arguments)
					arguments.push_back(arithmetize(argument));

				return fol::Predicate{formula.name, std::move(arguments)};
			}
			else if constexpr (std::is_same_v<T, fol::Comparison>)
				return fol::Comparison{formula.comparisonOperator, arithmetize(formula.left),
					arithmetize(formula.right)};
			else if constexpr (std::is_same_v<T, fol::In>)
				return fol::In{arithmetize(formula.element), arithmetize(formula.set)};
			else if constexpr (std::is_same_v<T, fol::Not>)
				return fol::Not{arithmetize(formula.argument)};
			else if constexpr (std::is_same_v<T, fol::And> || std::is_same_v<T, fol::Or>)
			{
				std::vector<fol::Formula> arguments;

				for (const auto &argument : formula.arguments)
					arguments.push_back(arithmetize(argument));

				return T{std::move(arguments)};
			}
			else if constexpr (std::is_same_v<T, fol::Implies>)
				return fol::Implies{arithmetize(formula.antecedent), arithmetize(formula.consequent)};
			else if constexpr (std::is_same_v<T, fol::Biconditional>)
				return fol::Biconditional{arithmetize(formula.left), arithmetize(formula.right)};
			else
				return T{formula.variables, arithmetize(formula.argument)};
		}, formula.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

IntegerDetectionResult detectIntegers(const CompletionResult &result)
{
	IntegerAnnotations annotations;

	// Annotations may enable further annotations, so iterate until nothing changes
	for (bool changed = true; changed;)
	{
		changed = false;

		for (const auto &definition : result.definitions)
			for (std::size_t i = 0; i < definition.headVariables.size(); i++)
			{
				const fol::IntegerAnnotation annotation{definition.predicate, i + 1};

				if (annotations.contains(annotation)
					|| !forcesInteger(definition.body, definition.headVariables[i], annotations))
				{
					continue;
				}

				annotations.insert(annotation);
				changed = true;
			}
	}

	IntegerDetectionResult detection{result, {}};

	for (auto &definition : detection.result.definitions)
	{
		for (std::size_t i = 0; i < definition.headVariables.size(); i++)
		{
			auto &headVariable = definition.headVariables[i];

			if (!annotations.contains({definition.predicate, i + 1}))
				continue;

			detection.annotations.push_back({definition.predicate, i + 1});

			if (headVariable.sort == fol::Sort::Integer)
				continue;

			const auto integerVariable = fol::Variable::fresh(fol::Sort::Integer, fol::VariableRole::Head);
			definition.body = fol::substitute(definition.body, headVariable, integerVariable);
			headVariable = integerVariable;
		}

		definition.body = arithmetize(narrowVariables(definition.body, annotations));
	}

	for (auto &constraint : detection.result.constraints)
		constraint = arithmetize(narrowVariables(constraint, annotations));

	return detection;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
