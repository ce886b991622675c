#ifndef __ANTHEM__ORACLE__CORRESPONDENCE_H
#define __ANTHEM__ORACLE__CORRESPONDENCE_H

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <anthem/Formula.h>
#include <anthem/Pipeline.h>
#include <anthem/Program.h>
#include <anthem/oracle/Interpretation.h>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Correspondence
//
// Compares the stable models of a program with the models of its translation within a finite
// domain, both projected onto the shown predicates
//
////////////////////////////////////////////////////////////////////////////////////////////////////

// Symbolic constants of the program and the external input, plus the integers between the least and
// greatest integer of the program widened by the margin
Domain defaultDomain(const ast::Program &program, const Interpretation &externalInput = {},
	std::int64_t margin = 2);

// Atoms of the external predicates over the domain
std::vector<GroundAtom> externalAtoms(const ast::Program &program, const Domain &domain);

// Every subset of the external atoms; throws BudgetError beyond the given number of atoms
std::vector<Interpretation> enumerateExternalInputs(const ast::Program &program, const Domain &domain,
	std::size_t atomBudget = 12);

// Shown predicates without externals (all predicates without externals if nothing is shown)
std::set<PredicateSignature> comparedPredicates(const ast::Program &program);

struct CorrespondenceReport
{
	enum class Verdict
	{
		Equivalent,
		Different,
		NotTight,
	};

	Verdict verdict;
	// Set for non-tight programs
	std::vector<GroundAtom> cycle;
	std::set<PredicateSignature> comparedPredicates;
	// Projected and sorted
	std::vector<Interpretation> stableModels;
	std::vector<Interpretation> formulaModels;

	bool holds() const
	{
		return verdict == Verdict::Equivalent;
	}

	std::string text() const;
};

// Formulas and annotations may mention the placeholder constants, which are substituted before
// evaluation, as in the program
CorrespondenceReport checkCorrespondence(const ast::Program &program, const std::vector<fol::Formula> &formulas,
	const std::vector<fol::IntegerAnnotation> &annotations, const Domain &domain,
	const Interpretation &externalInput, const Constants &constants = {});

// Translates the program with the given options first
CorrespondenceReport checkCorrespondence(const ast::Program &program, const Domain &domain,
	const Interpretation &externalInput, const Constants &constants = {}, const TranslationOptions &options = {});

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
