#include <anthem/Completion.h>

#include <algorithm>
#include <map>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Completion
//
////////////////////////////////////////////////////////////////////////////////////////////////////

CompletionResult complete(const std::vector<RuleFormula> &ruleFormulas, const ast::Program &program)
{
	CompletionResult result;
	result.externals = program.externals;

	std::map<PredicateSignature, std::size_t> definitionIndices;

	const auto definitionFor =
		[&](const PredicateSignature &signature) -> CompletedDefinition &
		{
			const auto match = definitionIndices.find(signature);

			if (match != definitionIndices.end())
				return result.definitions[match->second];

			std::vector<fol::Variable> headVariables;

			for (std::size_t i = 0; i < signature.arity; i++)
				headVariables.push_back(fol::Variable::fresh(fol::Sort::General, fol::VariableRole::Head));

			definitionIndices.emplace(signature, result.definitions.size());
			result.definitions.push_back({signature, std::move(headVariables),
				CompletedDefinition::Kind::OnlyIf, fol::makeFalse()});

			return result.definitions.back();
		};

	// Disjuncts per predicate, each standardized to the shared head variables
	std::vector<std::vector<std::pair<RuleFormula::Kind, fol::Formula>>> disjuncts;

	for (const auto &ruleFormula : ruleFormulas)
	{
		if (ruleFormula.kind == RuleFormula::Kind::Constraint)
		{
			result.constraints.push_back(fol::Not{ruleFormula.body});
			continue;
		}

		if (program.externals.contains(ruleFormula.predicate))
			throw LogicError(toString(ruleFormula.location) + ": external predicate “"
				+ toString(ruleFormula.predicate) + "” must not occur in a rule head");

		auto &definition = definitionFor(ruleFormula.predicate);
		const auto index = definitionIndices.at(ruleFormula.predicate);

		if (disjuncts.size() <= index)
			disjuncts.resize(index + 1);

		std::map<fol::Variable, fol::Term> renaming;

		for (std::size_t i = 0; i < ruleFormula.headVariables.size(); i++)
			renaming.emplace(ruleFormula.headVariables[i], definition.headVariables[i]);

		disjuncts[index].emplace_back(ruleFormula.kind, fol::substitute(ruleFormula.body, renaming));
	}

	for (std::size_t index = 0; index < disjuncts.size(); index++)
	{
		auto &definition = result.definitions[index];
		const auto &predicateDisjuncts = disjuncts[index];

		const auto hasDefiniteRule = std::any_of(predicateDisjuncts.begin(), predicateDisjuncts.end(),
			[](const auto &disjunct){return disjunct.first == RuleFormula::Kind::Definite;});

		std::vector<fol::Formula> arguments;

		for (const auto &[kind, body] : predicateDisjuncts)
		{
			// A choice rule {p(t)} :- B reads as p(t) :- B, not not p(t)
			if (hasDefiniteRule && kind == RuleFormula::Kind::Choice)
				arguments.push_back(fol::makeAnd({body, headAtom(definition)}));
			else
				arguments.push_back(body);
		}

		definition.kind = hasDefiniteRule ? CompletedDefinition::Kind::Iff : CompletedDefinition::Kind::OnlyIf;
		definition.body = fol::makeOr(std::move(arguments));
	}

	// Predicates without rules are identically false
	for (const auto &signature : ast::predicatesInOrder(program))
	{
		if (program.externals.contains(signature) || definitionIndices.contains(signature))
			continue;

		auto &definition = definitionFor(signature);
		definition.kind = CompletedDefinition::Kind::Iff;
		definition.body = fol::makeFalse();
	}

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula headAtom(const CompletedDefinition &definition)
{
	std::vector<fol::Term> arguments(definition.headVariables.begin(), definition.headVariables.end());

	return fol::Predicate{definition.predicate.name, std::move(arguments)};
}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula definitionFormula(const CompletedDefinition &definition)
{
	fol::Formula connective = (definition.kind == CompletedDefinition::Kind::Iff)
		? fol::Formula(fol::Biconditional{headAtom(definition), definition.body})
		: fol::Formula(fol::Implies{headAtom(definition), definition.body});

	return fol::makeForAll(definition.headVariables, std::move(connective));
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<fol::Formula> formulas(const CompletionResult &result)
{
	std::vector<fol::Formula> formulas;
	formulas.reserve(result.definitions.size() + result.constraints.size());

	for (const auto &definition : result.definitions)
		formulas.push_back(definitionFormula(definition));

	formulas.insert(formulas.end(), result.constraints.begin(), result.constraints.end());

	return formulas;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
