#include <anthem/Pipeline.h>

#include <anthem/Format.h>
#include <anthem/HiddenPredicateElimination.h>
#include <anthem/IntegerDetection.h>
#include <anthem/Simplification.h>
#include <anthem/Translation.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Pipeline
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string TranslationOutput::text() const
{
	FormulaPrinter printer;
	std::string output;

	for (const auto &formula : formulas)
	{
		output += printer.print(formula);
		output += "\n";
	}

	for (const auto &annotation : annotations)
	{
		output += printer.print(annotation);
		output += "\n";
	}

	return output;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

TranslationOutput translate(const ast::Program &program, const TranslationOptions &options)
{
	TranslationOutput output;

	const auto ruleFormulas = translateProgram(program);

	if (!options.complete)
	{
		for (const auto &ruleFormula : ruleFormulas)
		{
			auto formula = ruleFormulaToFormula(ruleFormula);

			if (options.simplify)
				formula = simplifyFormula(formula);

			output.formulas.push_back(std::move(formula));
		}

		return output;
	}

	auto completion = complete(ruleFormulas, program);

	auto elimination = eliminate(completion, hiddenPredicates(completion, program));
	completion = std::move(elimination.result);
	output.warnings = std::move(elimination.warnings);

	if (options.simplify)
		completion = simplify(completion);

	if (options.detectIntegers)
	{
		auto detection = detectIntegers(completion);
		completion = std::move(detection.result);
		output.annotations = std::move(detection.annotations);

		if (options.simplify)
			completion = simplify(completion);
	}

	output.formulas = formulas(completion);
	output.completion = std::move(completion);

	return output;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
