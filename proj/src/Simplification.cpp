#include <anthem/Simplification.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Simplification
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

constexpr std::size_t PassBudget = 1000;

using NodeRewrite = std::function<fol::Formula(const fol::Formula &)>;

// Rebuilds the formula with rewritten children, then rewrites the node itself
fol::Formula transformBottomUp(const fol::Formula &formula, const NodeRewrite &rewrite)
{
	const auto rebuilt = std::visit(
		[&](const auto &formula) -> fol::Formula
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, fol::Boolean> || std::is_same_v<T, fol::Predicate>
				|| std::is_same_v<T, fol::Comparison> || std::is_same_v<T, fol::In>)
			{
				return formula;
			}
			else if constexpr (std::is_same_v<T, fol::Not>)
				return fol::Not{transformBottomUp(formula.argument, rewrite)};
			else if constexpr (std::is_same_v<T, fol::And> || std::is_same_v<T, fol::Or>)
			{
				std::vector<fol::Formula> arguments;
				arguments.reserve(formula.arguments.size());

				for (const auto &argument : formula.arguments)
					arguments.push_back(transformBottomUp(argument, rewrite));

				if constexpr (std::is_same_v<T, fol::And>)
					return fol::makeAnd(std::move(arguments));
				else
					return fol::makeOr(std::move(arguments));
			}
			else if constexpr (std::is_same_v<T, fol::Implies>)
				return fol::Implies{transformBottomUp(formula.antecedent, rewrite),
					transformBottomUp(formula.consequent, rewrite)};
			else if constexpr (std::is_same_v<T, fol::Biconditional>)
				return fol::Biconditional{transformBottomUp(formula.left, rewrite),
					transformBottomUp(formula.right, rewrite)};
			else
				return T{formula.variables, transformBottomUp(formula.argument, rewrite)};
		}, formula.variant());

	return rewrite(rebuilt);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Term valueToTerm(const Value &value)
{
	if (value.isInteger())
		return fol::IntegerConstant{value.integer()};

	return fol::SymbolicConstant{value.symbol()};
}

fol::Formula equality(fol::Term left, fol::Term right)
{
	return fol::Comparison{ComparisonOperator::Equal, std::move(left), std::move(right)};
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula membershipToEquality(const fol::Formula &formula)
{
	const auto *in = formula.as<fol::In>();

	if (!in)
		return formula;

	if (fol::isSingleValued(in->set))
		return equality(in->element, in->set);

	const auto values = groundValues(in->set);

	if (!values)
		return formula;

	if (values->isEmpty())
		return fol::makeFalse();

	if (const auto value = values->single())
		return equality(in->element, valueToTerm(*value));

	return formula;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<fol::Formula> conjunctsOf(const fol::Formula &formula)
{
	if (const auto *and_ = formula.as<fol::And>())
		return and_->arguments;

	return {formula};
}

// The term t if the formula is “variable = t” or “t = variable” and t may replace the variable
std::optional<fol::Term> definingTerm(const fol::Formula &formula, const fol::Variable &variable)
{
	const auto *comparison = formula.as<fol::Comparison>();

	if (!comparison || comparison->comparisonOperator != ComparisonOperator::Equal)
		return std::nullopt;

	const auto isVariable =
		[&](const fol::Term &term)
		{
			const auto *other = term.as<fol::Variable>();
			return other && *other == variable;
		};

	const auto admissible =
		[&](const fol::Term &term)
		{
			return fol::isSingleValued(term) && !fol::occurs(variable, term)
				&& (variable.sort == fol::Sort::General || fol::isIntegerValued(term));
		};

	if (isVariable(comparison->left) && admissible(comparison->right))
		return comparison->right;

	if (isVariable(comparison->right) && admissible(comparison->left))
		return comparison->left;

	return std::nullopt;
}

fol::Formula equalityElimination(const fol::Formula &formula)
{
	const auto *exists = formula.as<fol::Exists>();

	if (!exists)
		return formula;

	auto conjuncts = conjunctsOf(exists->argument);

	for (const auto &variable : exists->variables)
		for (std::size_t i = 0; i < conjuncts.size(); i++)
		{
			const auto term = definingTerm(conjuncts[i], variable);

			if (!term)
				continue;

			conjuncts.erase(conjuncts.begin() + i);

			auto variables = exists->variables;
			variables.erase(std::find(variables.begin(), variables.end(), variable));

			return fol::makeExists(std::move(variables),
				fol::substitute(fol::makeAnd(std::move(conjuncts)), variable, *term));
		}

	return formula;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::optional<bool> truthValue(const fol::Formula &formula)
{
	if (const auto *boolean = formula.as<fol::Boolean>())
		return boolean->value;

	return std::nullopt;
}

std::optional<bool> evaluateComparison(const fol::Comparison &comparison)
{
	const auto holds =
		[&](int order) -> bool
		{
			switch (comparison.comparisonOperator)
			{
				case ComparisonOperator::Equal:
					return order == 0;
				case ComparisonOperator::NotEqual:
					return order != 0;
				case ComparisonOperator::Less:
					return order < 0;
				case ComparisonOperator::LessEqual:
					return order <= 0;
				case ComparisonOperator::Greater:
					return order > 0;
				case ComparisonOperator::GreaterEqual:
					return order >= 0;
			}

			return false;
		};

	if (comparison.left == comparison.right && fol::isSingleValued(comparison.left))
		return holds(0);

	const auto *left = comparison.left.as<fol::IntegerConstant>();
	const auto *right = comparison.right.as<fol::IntegerConstant>();

	if (left && right)
		return holds(left->value < right->value ? -1 : (left->value > right->value ? 1 : 0));

	return std::nullopt;
}

fol::Formula booleanIdentity(const fol::Formula &formula)
{
	if (const auto *comparison = formula.as<fol::Comparison>())
	{
		if (const auto value = evaluateComparison(*comparison))
			return fol::Boolean{*value};

		return formula;
	}

	if (const auto *not_ = formula.as<fol::Not>())
	{
		if (const auto value = truthValue(not_->argument))
			return fol::Boolean{!*value};

		return formula;
	}

	if (const auto *and_ = formula.as<fol::And>())
	{
		std::vector<fol::Formula> arguments;

		for (const auto &argument : and_->arguments)
		{
			const auto value = truthValue(argument);

			if (value == false)
				return fol::makeFalse();

			if (!value)
				arguments.push_back(argument);
		}

		if (arguments.size() == and_->arguments.size())
			return formula;

		return fol::makeAnd(std::move(arguments));
	}

	if (const auto *or_ = formula.as<fol::Or>())
	{
		std::vector<fol::Formula> arguments;

		for (const auto &argument : or_->arguments)
		{
			const auto value = truthValue(argument);

			if (value == true)
				return fol::makeTrue();

			if (!value)
				arguments.push_back(argument);
		}

		if (arguments.size() == or_->arguments.size())
			return formula;

		return fol::makeOr(std::move(arguments));
	}

	if (const auto *implies = formula.as<fol::Implies>())
	{
		const auto antecedent = truthValue(implies->antecedent);
		const auto consequent = truthValue(implies->consequent);

		if (antecedent == false || consequent == true)
			return fol::makeTrue();

		if (antecedent == true)
			return implies->consequent;

		if (consequent == false)
			return fol::Not{implies->antecedent};

		return formula;
	}

	if (const auto *biconditional = formula.as<fol::Biconditional>())
	{
		const auto left = truthValue(biconditional->left);
		const auto right = truthValue(biconditional->right);

		if (left && right)
			return fol::Boolean{*left == *right};

		if (left)
			return *left ? biconditional->right : fol::Formula(fol::Not{biconditional->right});

		if (right)
			return *right ? biconditional->left : fol::Formula(fol::Not{biconditional->left});

		return formula;
	}

	if (const auto *forAll = formula.as<fol::ForAll>())
		return truthValue(forAll->argument) ? forAll->argument : formula;

	if (const auto *exists = formula.as<fol::Exists>())
		return truthValue(exists->argument) ? exists->argument : formula;

	return formula;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula doubleNegation(const fol::Formula &formula)
{
	if (const auto *outer = formula.as<fol::Not>())
		if (const auto *inner = outer->argument.as<fol::Not>())
			return inner->argument;

	return formula;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula quantifierPruning(const fol::Formula &formula)
{
	const auto prune =
		[](const auto &quantifier)
		{
			const auto freeInBody = fol::freeVariables(quantifier.argument);
			std::vector<fol::Variable> variables;

			for (const auto &variable : quantifier.variables)
				if (freeInBody.contains(variable))
					variables.push_back(variable);

			return variables;
		};

	if (const auto *forAll = formula.as<fol::ForAll>())
	{
		auto variables = prune(*forAll);

		if (variables.size() == forAll->variables.size())
			return formula;

		return fol::makeForAll(std::move(variables), forAll->argument);
	}

	if (const auto *exists = formula.as<fol::Exists>())
	{
		auto variables = prune(*exists);

		if (variables.size() == exists->variables.size())
			return formula;

		return fol::makeExists(std::move(variables), exists->argument);
	}

	return formula;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula complement(const fol::Formula &formula)
{
	if (const auto *not_ = formula.as<fol::Not>())
		return not_->argument;

	if (const auto *comparison = formula.as<fol::Comparison>())
		return fol::Comparison{anthem::complement(comparison->comparisonOperator), comparison->left,
			comparison->right};

	if (const auto value = truthValue(formula))
		return fol::Boolean{!*value};

	return fol::Not{formula};
}

fol::Formula constraintToUniversal(const fol::Formula &formula)
{
	const auto *not_ = formula.as<fol::Not>();

	if (!not_)
		return formula;

	std::vector<fol::Variable> variables;
	fol::Formula body = not_->argument;

	if (const auto *exists = body.as<fol::Exists>())
	{
		variables = exists->variables;
		body = exists->argument;
	}
	else if (!body.is<fol::And>())
		return formula;

	std::vector<fol::Formula> disjuncts;

	for (const auto &conjunct : conjunctsOf(body))
		disjuncts.push_back(complement(conjunct));

	return fol::makeForAll(std::move(variables), fol::makeOr(std::move(disjuncts)));
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula clauseToImplication(const fol::Formula &formula)
{
	std::vector<fol::Variable> variables;
	const fol::Formula *body = &formula;

	if (const auto *forAll = formula.as<fol::ForAll>())
	{
		variables = forAll->variables;
		body = &forAll->argument;
	}

	const auto *or_ = body->as<fol::Or>();

	if (!or_ || or_->arguments.size() != 2)
		return formula;

	const auto *first = or_->arguments[0].as<fol::Not>();
	const auto *second = or_->arguments[1].as<fol::Not>();

	// Exactly one negative disjunct
	if ((first == nullptr) == (second == nullptr))
		return formula;

	if (first)
		return fol::makeForAll(std::move(variables), fol::Implies{first->argument, or_->arguments[1]});

	return fol::makeForAll(std::move(variables), fol::Implies{second->argument, or_->arguments[0]});
}

////////////////////////////////////////////////////////////////////////////////////////////////////

NodeRewrite nodeRewrite(Rewrite rewrite)
{
	switch (rewrite)
	{
		case Rewrite::MembershipToEquality:
			return membershipToEquality;
		case Rewrite::EqualityElimination:
			return equalityElimination;
		case Rewrite::BooleanIdentity:
			return booleanIdentity;
		case Rewrite::DoubleNegation:
			return doubleNegation;
		case Rewrite::ConstraintToUniversal:
			return constraintToUniversal;
		case Rewrite::ClauseToImplication:
			return clauseToImplication;
		case Rewrite::QuantifierPruning:
			return quantifierPruning;
	}

	throw std::logic_error("unknown rewrite");
}

fol::Formula applySubformulaRewrites(const fol::Formula &formula)
{
	return transformBottomUp(formula,
		[](const fol::Formula &node)
		{
			auto result = membershipToEquality(node);
			result = equalityElimination(result);
			result = booleanIdentity(result);
			result = doubleNegation(result);
			return quantifierPruning(result);
		});
}

fol::Formula fixpoint(const fol::Formula &formula, bool includeRootRewrites)
{
	auto current = formula;

	for (std::size_t pass = 0; pass < PassBudget; pass++)
	{
		auto next = applySubformulaRewrites(current);

		if (includeRootRewrites)
			next = clauseToImplication(constraintToUniversal(next));

		if (next == current)
			return current;

		current = std::move(next);
	}

	throw LogicError("simplification did not reach a fixpoint within the pass budget");
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

const std::vector<Rewrite> &allRewrites()
{
	static const std::vector<Rewrite> rewrites{Rewrite::MembershipToEquality, Rewrite::EqualityElimination,
		Rewrite::BooleanIdentity, Rewrite::DoubleNegation, Rewrite::ConstraintToUniversal,
		Rewrite::ClauseToImplication, Rewrite::QuantifierPruning};

	return rewrites;
}

std::string toString(Rewrite rewrite)
{
	switch (rewrite)
	{
		case Rewrite::MembershipToEquality:
			return "membership to equality";
		case Rewrite::EqualityElimination:
			return "equality elimination";
		case Rewrite::BooleanIdentity:
			return "boolean identity";
		case Rewrite::DoubleNegation:
			return "double negation";
		case Rewrite::ConstraintToUniversal:
			return "constraint to universal";
		case Rewrite::ClauseToImplication:
			return "clause to implication";
		case Rewrite::QuantifierPruning:
			return "quantifier pruning";
	}

	return "unknown";
}

bool isRootRewrite(Rewrite rewrite)
{
	return rewrite == Rewrite::ConstraintToUniversal || rewrite == Rewrite::ClauseToImplication;
}

fol::Formula applyRewrite(Rewrite rewrite, const fol::Formula &formula)
{
	const auto node = nodeRewrite(rewrite);

	if (isRootRewrite(rewrite))
		return node(formula);

	return transformBottomUp(formula, node);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::optional<ValueSet> groundValues(const fol::Term &term)
{
	try
	{
		return std::visit(
			[](const auto &term) -> std::optional<ValueSet>
			{
				using T = std::decay_t<decltype(term)>;

				if constexpr (std::is_same_v<T, fol::IntegerConstant>)
					return ValueSet::singleton(Value::integer(term.value));
				else if constexpr (std::is_same_v<T, fol::Arithmetic> || std::is_same_v<T, fol::SetOperation>)
				{
					const auto left = groundValues(term.left);
					const auto right = groundValues(term.right);

					if (!left || !right)
						return std::nullopt;

					return apply(term.binaryOperator, *left, *right);
				}
				else
					// Symbolic constants may stand for integers defined elsewhere
					return std::nullopt;
			}, term.variant());
	}
	catch (const std::length_error &)
	{
		return std::nullopt;
	}
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula simplifyFormula(const fol::Formula &formula)
{
	return fixpoint(formula, true);
}

fol::Formula simplifySubformulas(const fol::Formula &formula)
{
	return fixpoint(formula, false);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

CompletionResult simplify(const CompletionResult &result)
{
	auto simplified = result;

	for (auto &definition : simplified.definitions)
		definition.body = simplifySubformulas(definition.body);

	for (auto &constraint : simplified.constraints)
		constraint = simplifyFormula(constraint);

	return simplified;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
