#include <anthem/oracle/Correspondence.h>

#include <algorithm>
#include <limits>

#include <anthem/oracle/Evaluation.h>
#include <anthem/oracle/Grounding.h>
#include <anthem/oracle/StableModels.h>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Correspondence
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

struct ProgramConstants
{
	std::set<std::string> symbols;
	std::int64_t lower = std::numeric_limits<std::int64_t>::max();
	std::int64_t upper = std::numeric_limits<std::int64_t>::min();

	void add(const ast::Term &term)
	{
		if (const auto *integer = term.as<ast::Integer>())
		{
			lower = std::min(lower, integer->value);
			upper = std::max(upper, integer->value);
		}
		else if (const auto *symbol = term.as<ast::Symbol>())
			symbols.insert(symbol->name);
		else if (const auto *binaryOperation = term.as<ast::BinaryOperation>())
		{
			add(binaryOperation->left);
			add(binaryOperation->right);
		}
	}

	void add(const ast::Atom &atom)
	{
		for (const auto &argument : atom.arguments)
			add(argument);
	}
};

}

////////////////////////////////////////////////////////////////////////////////////////////////////

Domain defaultDomain(const ast::Program &program, const Interpretation &externalInput, std::int64_t margin)
{
	ProgramConstants constants;

	for (const auto &rule : program.rules)
	{
		if (const auto *atom = ast::headAtom(rule))
			constants.add(*atom);

		for (const auto &literal : rule.body)
			std::visit(
				[&](const auto &literal)
				{
					using T = std::decay_t<decltype(literal)>;

					if constexpr (std::is_same_v<T, ast::Comparison>)
					{
						constants.add(literal.left);
						constants.add(literal.right);
					}
					else
						constants.add(literal.atom);
				}, literal);
	}

	Domain domain;

	for (const auto &symbol : constants.symbols)
		domain.values.insert(Value::symbol(symbol));

	for (const auto &atom : externalInput)
		domain.values.insert(atom.arguments.begin(), atom.arguments.end());

	if (constants.lower <= constants.upper)
		for (auto value = constants.lower - margin; value <= constants.upper + margin; value++)
			domain.values.insert(Value::integer(value));

	return domain;
}

std::vector<GroundAtom> externalAtoms(const ast::Program &program, const Domain &domain)
{
	std::vector<GroundAtom> result;

	for (const auto &external : program.externals)
		for (auto &atom : groundAtoms(external, domain))
			result.push_back(std::move(atom));

	return result;
}

std::vector<Interpretation> enumerateExternalInputs(const ast::Program &program, const Domain &domain,
	std::size_t atomBudget)
{
	const auto atoms = externalAtoms(program, domain);

	if (atoms.size() > atomBudget)
		throw BudgetError("enumerating external inputs needs " + std::to_string(atoms.size())
			+ " external atoms, budget is " + std::to_string(atomBudget));

	std::vector<Interpretation> result;

	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); mask++)
	{
		Interpretation input;

		for (std::size_t i = 0; i < atoms.size(); i++)
			if (mask & (std::uint64_t{1} << i))
				input.insert(atoms[i]);

		result.push_back(std::move(input));
	}

	return result;
}

std::set<PredicateSignature> comparedPredicates(const ast::Program &program)
{
	std::set<PredicateSignature> result;

	if (program.hasShowDirective)
		result = program.shows;
	else
	{
		const auto predicates = ast::predicatesInOrder(program);
		result.insert(predicates.begin(), predicates.end());
	}

	for (const auto &external : program.externals)
		result.erase(external);

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string CorrespondenceReport::text() const
{
	std::string result;

	const auto printModels =
		[&](const char *title, const std::vector<Interpretation> &models)
		{
			result += title;
			result += " (" + std::to_string(models.size()) + "):\n";

			for (const auto &model : models)
				result += "  " + toString(model) + "\n";
		};

	switch (verdict)
	{
		case Verdict::NotTight:
		{
			result += "not tight: positive cycle ";

			for (std::size_t i = 0; i < cycle.size(); i++)
				result += (i > 0 ? " -> " : "") + toString(cycle[i]);

			return result + "\n";
		}
		case Verdict::Equivalent:
			result += "equivalent";
			break;
		case Verdict::Different:
			result += "different";
			break;
	}

	result += " on {";

	for (auto predicate = comparedPredicates.begin(); predicate != comparedPredicates.end(); predicate++)
		result += (predicate != comparedPredicates.begin() ? ", " : "") + toString(*predicate);

	result += "}\n";

	printModels("stable models", stableModels);
	printModels("formula models", formulaModels);

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

std::vector<Interpretation> project(const std::vector<Interpretation> &models,
	const std::set<PredicateSignature> &predicates)
{
	std::set<Interpretation> result;

	for (const auto &model : models)
		result.insert(restrict(model, predicates));

	return {result.begin(), result.end()};
}

}

CorrespondenceReport checkCorrespondence(const ast::Program &program, const std::vector<fol::Formula> &formulas,
	const std::vector<fol::IntegerAnnotation> &annotations, const Domain &domain,
	const Interpretation &externalInput, const oracle::Constants &constants)
{
	CorrespondenceReport report;
	report.comparedPredicates = comparedPredicates(program);

	const auto substitutedProgram = substituteConstants(program, constants);
	const auto relevantInput = restrict(externalInput, program.externals);

	// Cycles through underivable atoms still make the completion weaker than the program
	if (const auto cycle = findPositiveCycle(ground(substitutedProgram, domain, relevantInput, false)))
	{
		report.verdict = CorrespondenceReport::Verdict::NotTight;
		report.cycle = *cycle;
		return report;
	}

	const auto groundProgram = ground(substitutedProgram, domain, relevantInput);
	std::vector<fol::Formula> theory;

	for (const auto &formula : formulas)
		theory.push_back(substituteConstants(formula, constants));

	for (const auto &annotation : annotations)
		theory.push_back(fol::expandAnnotation(annotation));

	report.stableModels = project(stableModels(groundProgram), report.comparedPredicates);
	report.formulaModels = project(formulaModels(theory, domain, program.externals, externalInput),
		report.comparedPredicates);

	report.verdict = report.stableModels == report.formulaModels
		? CorrespondenceReport::Verdict::Equivalent
		: CorrespondenceReport::Verdict::Different;

	return report;
}

CorrespondenceReport checkCorrespondence(const ast::Program &program, const Domain &domain,
	const Interpretation &externalInput, const oracle::Constants &constants, const TranslationOptions &options)
{
	const auto output = translate(program, options);

	return checkCorrespondence(program, output.formulas, output.annotations, domain, externalInput, constants);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}
