#ifndef __ANTHEM__COMPLETION_H
#define __ANTHEM__COMPLETION_H

#include <set>
#include <vector>

#include <anthem/Formula.h>
#include <anthem/Program.h>
#include <anthem/Translation.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Completion
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct CompletedDefinition
{
	enum class Kind
	{
		// p(V) <-> body
		Iff,
		// p(V) -> body, for predicates defined by choice rules only
		OnlyIf,
	};

	PredicateSignature predicate;
	std::vector<fol::Variable> headVariables;
	Kind kind;
	fol::Formula body;
};

struct CompletionResult
{
	std::vector<CompletedDefinition> definitions;
	// Sentences
	std::vector<fol::Formula> constraints;
	std::set<PredicateSignature> externals;
};

////////////////////////////////////////////////////////////////////////////////////////////////////

// Definitions in order of first head occurrence followed by predicates that occur in bodies only,
// constraints in source order
CompletionResult complete(const std::vector<RuleFormula> &ruleFormulas, const ast::Program &program);

fol::Formula headAtom(const CompletedDefinition &definition);
// “forall V (p(V) <-> body)” or “forall V (p(V) -> body)”, without quantifier for arity 0
fol::Formula definitionFormula(const CompletedDefinition &definition);

// Definitions first, then constraints
std::vector<fol::Formula> formulas(const CompletionResult &result);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
