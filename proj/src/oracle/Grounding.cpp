#include <anthem/oracle/Grounding.h>

#include <algorithm>
#include <map>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Grounding
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string toString(const GroundRule &rule)
{
	std::string result;

	if (rule.kind == GroundRule::Kind::Choice)
		result += "{" + toString(*rule.head) + "}";
	else if (rule.head)
		result += toString(*rule.head);

	if (rule.positiveBody.empty() && rule.negativeBody.empty())
		return result + ".";

	result += " :- ";
	bool first = true;

	for (const auto &atom : rule.positiveBody)
	{
		result += (first ? "" : ", ") + toString(atom);
		first = false;
	}

	for (const auto &atom : rule.negativeBody)
	{
		result += (first ? "not " : ", not ") + toString(atom);
		first = false;
	}

	return result + ".";
}

std::set<GroundAtom> GroundProgram::atoms() const
{
	std::set<GroundAtom> result;

	for (const auto &rule : rules)
	{
		if (rule.head)
			result.insert(*rule.head);

		result.insert(rule.positiveBody.begin(), rule.positiveBody.end());
		result.insert(rule.negativeBody.begin(), rule.negativeBody.end());
	}

	return result;
}

std::set<GroundAtom> GroundProgram::headAtoms() const
{
	std::set<GroundAtom> result;

	for (const auto &rule : rules)
		if (rule.head)
			result.insert(*rule.head);

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

using Assignment = std::map<std::string, Value>;

ast::Term instantiate(const ast::Term &term, const Assignment &assignment)
{
	if (const auto *variable = term.as<ast::Variable>())
	{
		const auto &value = assignment.at(variable->name);

		if (value.isInteger())
			return ast::Integer{value.integer()};

		return ast::Symbol{value.symbol()};
	}

	if (const auto *binaryOperation = term.as<ast::BinaryOperation>())
		return ast::BinaryOperation{binaryOperation->binaryOperator, instantiate(binaryOperation->left, assignment),
			instantiate(binaryOperation->right, assignment)};

	return term;
}

// Values an argument can take: compound terms are bound to auxiliary variables ranging over the
// domain, while plain constants keep their value
std::vector<Value> argumentValues(const ast::Term &term, const Assignment &assignment, const Domain &domain,
	bool restrictToDomain)
{
	const auto instance = instantiate(term, assignment);
	const auto isCompound = instance.is<ast::BinaryOperation>();

	std::vector<Value> result;

	for (const auto &value : values(instance).elements())
		if (!(restrictToDomain || isCompound) || domain.contains(value))
			result.push_back(value);

	return result;
}

// Candidate argument tuples of an atom; anonymous arguments range over the domain
std::vector<std::vector<Value>> argumentTuples(const ast::Atom &atom, const Assignment &assignment,
	const Domain &domain, bool restrictToDomain)
{
	std::vector<std::vector<Value>> result{{}};
	const auto domainValues = domain.generalValues();

	for (const auto &argument : atom.arguments)
	{
		const auto values = argument.is<ast::Anonymous>()
			? domainValues
			: argumentValues(argument, assignment, domain, restrictToDomain);

		std::vector<std::vector<Value>> extended;

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

bool compare(ComparisonOperator comparisonOperator, const Value &left, const Value &right)
{
	switch (comparisonOperator)
	{
		case ComparisonOperator::Equal:
			return left == right;
		case ComparisonOperator::NotEqual:
			return left != right;
		case ComparisonOperator::Less:
			return left < right;
		case ComparisonOperator::LessEqual:
			return left <= right;
		case ComparisonOperator::Greater:
			return left > right;
		case ComparisonOperator::GreaterEqual:
			return left >= right;
	}

	return false;
}

// One way of satisfying a body literal
struct Alternative
{
	std::vector<GroundAtom> positive;
	std::vector<GroundAtom> negative;
};

std::vector<Alternative> alternatives(const ast::BodyLiteral &literal, const Assignment &assignment,
	const Domain &domain, const ast::Program &program, const Interpretation &externalInput)
{
	const auto isExternal =
		[&](const ast::Atom &atom)
		{
			return program.externals.contains(atom.signature());
		};

	if (const auto *positive = std::get_if<ast::PositiveLiteral>(&literal))
	{
		std::vector<Alternative> result;

		for (auto &arguments : argumentTuples(positive->atom, assignment, domain, true))
		{
			GroundAtom atom{positive->atom.predicate, std::move(arguments)};

			if (!isExternal(positive->atom))
				result.push_back({{std::move(atom)}, {}});
			else if (externalInput.contains(atom))
				return {Alternative{}};
		}

		return result;
	}

	if (const auto *negative = std::get_if<ast::NegativeLiteral>(&literal))
	{
		// Anonymous arguments are projected: every instance must be false
		std::vector<std::size_t> anonymousPositions;
		ast::Atom named{negative->atom.predicate, {}};

		for (std::size_t i = 0; i < negative->atom.arguments.size(); i++)
		{
			if (negative->atom.arguments[i].is<ast::Anonymous>())
				anonymousPositions.push_back(i);
			else
				named.arguments.push_back(negative->atom.arguments[i]);
		}

		const auto anonymousTuples = tuples(domain.generalValues(), anonymousPositions.size());

		std::vector<Alternative> result;

		for (const auto &namedArguments : argumentTuples(named, assignment, domain, false))
		{
			Alternative alternative;
			bool isSatisfiable = true;

			for (const auto &anonymousArguments : anonymousTuples)
			{
				GroundAtom atom{negative->atom.predicate, {}};

				for (std::size_t i = 0, namedIndex = 0, anonymousIndex = 0; i < negative->atom.arguments.size(); i++)
				{
					if (anonymousIndex < anonymousPositions.size() && anonymousPositions[anonymousIndex] == i)
						atom.arguments.push_back(anonymousArguments[anonymousIndex++]);
					else
						atom.arguments.push_back(namedArguments[namedIndex++]);
				}

				if (isExternal(negative->atom))
				{
					if (externalInput.contains(atom))
						isSatisfiable = false;
				}
				else if (std::all_of(atom.arguments.begin(), atom.arguments.end(),
					[&](const auto &value){return domain.contains(value);}))
				{
					alternative.negative.push_back(std::move(atom));
				}
			}

			if (isSatisfiable)
				result.push_back(std::move(alternative));
		}

		return result;
	}

	const auto &comparison = std::get<ast::Comparison>(literal);

	const auto left = instantiate(comparison.left, assignment);
	const auto right = instantiate(comparison.right, assignment);
	const auto isLeftCompound = left.is<ast::BinaryOperation>();
	const auto isRightCompound = right.is<ast::BinaryOperation>();

	// “X = t” with a multi-valued t is a membership test; otherwise compound sides are bound to
	// auxiliary variables ranging over the domain
	const auto isMembership = comparison.comparisonOperator == ComparisonOperator::Equal
		&& isLeftCompound != isRightCompound;

	const auto sideValues =
		[&](const ast::Term &term, bool isCompound)
		{
			std::vector<Value> result;

			for (const auto &value : values(term).elements())
				if (!isCompound || isMembership || domain.contains(value))
					result.push_back(value);

			return result;
		};

	for (const auto &leftValue : sideValues(left, isLeftCompound))
		for (const auto &rightValue : sideValues(right, isRightCompound))
			if (compare(comparison.comparisonOperator, leftValue, rightValue))
				return {Alternative{}};

	return {};
}

void groundRule(const ast::Rule &rule, const Assignment &assignment, const Domain &domain,
	const ast::Program &program, const Interpretation &externalInput, std::set<GroundRule> &result)
{
	std::vector<Alternative> instances{Alternative{}};

	for (const auto &literal : rule.body)
	{
		const auto literalAlternatives = alternatives(literal, assignment, domain, program, externalInput);

		if (literalAlternatives.empty())
			return;

		std::vector<Alternative> extended;

		for (const auto &instance : instances)
			for (const auto &alternative : literalAlternatives)
			{
				auto combined = instance;
				combined.positive.insert(combined.positive.end(), alternative.positive.begin(),
					alternative.positive.end());
				combined.negative.insert(combined.negative.end(), alternative.negative.begin(),
					alternative.negative.end());
				extended.push_back(std::move(combined));
			}

		instances = std::move(extended);
	}

	const auto normalize =
		[](std::vector<GroundAtom> &atoms)
		{
			std::sort(atoms.begin(), atoms.end());
			atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
		};

	for (auto &instance : instances)
	{
		normalize(instance.positive);
		normalize(instance.negative);
	}

	const auto *head = ast::headAtom(rule);

	if (!head)
	{
		for (auto &instance : instances)
			result.insert({GroundRule::Kind::Constraint, std::nullopt, std::move(instance.positive),
				std::move(instance.negative)});

		return;
	}

	const auto kind = std::holds_alternative<ast::ChoiceHead>(rule.head)
		? GroundRule::Kind::Choice
		: GroundRule::Kind::Basic;

	// Every value combination of the head arguments is derived
	for (auto &arguments : argumentTuples(*head, assignment, domain, true))
	{
		GroundAtom headAtom{head->predicate, std::move(arguments)};

		for (const auto &instance : instances)
			result.insert({kind, headAtom, instance.positive, instance.negative});
	}
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

GroundProgram ground(const ast::Program &program, const Domain &domain, const Interpretation &externalInput,
	bool pruneUnderivable)
{
	std::set<GroundRule> rules;
	const auto domainValues = domain.generalValues();

	for (const auto &rule : program.rules)
	{
		const auto variables = ast::variablesInOrder(rule);

		for (const auto &values : tuples(domainValues, variables.size()))
		{
			Assignment assignment;

			for (std::size_t i = 0; i < variables.size(); i++)
				assignment.emplace(variables[i], values[i]);

			groundRule(rule, assignment, domain, program, externalInput, rules);
		}
	}

	if (!pruneUnderivable)
		return {{rules.begin(), rules.end()}};

	// Atoms that some rule may derive, ignoring negation
	std::set<GroundAtom> derivable;

	for (bool changed = true; changed;)
	{
		changed = false;

		for (const auto &rule : rules)
			if (rule.head && !derivable.contains(*rule.head)
				&& std::all_of(rule.positiveBody.begin(), rule.positiveBody.end(),
					[&](const auto &atom){return derivable.contains(atom);}))
			{
				derivable.insert(*rule.head);
				changed = true;
			}
	}

	std::set<GroundRule> simplified;

	for (auto rule : rules)
	{
		if (!std::all_of(rule.positiveBody.begin(), rule.positiveBody.end(),
			[&](const auto &atom){return derivable.contains(atom);}))
		{
			continue;
		}

		std::erase_if(rule.negativeBody, [&](const auto &atom){return !derivable.contains(atom);});
		simplified.insert(std::move(rule));
	}

	return {{simplified.begin(), simplified.end()}};
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}
