#ifndef __ANTHEM__TRANSLATION_H
#define __ANTHEM__TRANSLATION_H

#include <map>
#include <string>
#include <vector>

#include <anthem/Formula.h>
#include <anthem/Program.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Translation
//
// Turns each rule into a head descriptor and a body formula. All variables are general at this
// stage, so every arithmetic term over variables is translated into a set operation that may
// only appear to the right of “in”.
//
////////////////////////////////////////////////////////////////////////////////////////////////////

using VariableMap = std::map<std::string, fol::Variable>;

struct RuleFormula
{
	enum class Kind
	{
		Definite,
		Choice,
		Constraint,
	};

	Kind kind;
	// Unused for constraints
	PredicateSignature predicate;
	std::vector<fol::Variable> headVariables;
	fol::Formula body;
	Location location;
};

////////////////////////////////////////////////////////////////////////////////////////////////////

// The image of a program term without anonymous variables
fol::Term translateTermStructure(const ast::Term &term, const VariableMap &variables);

// A formula stating that target is one of the values of term: “target = t” for single-valued
// images and “target in t” otherwise
fol::Formula translateTerm(const ast::Term &term, const fol::Variable &target, const VariableMap &variables);

fol::Formula translateLiteral(const ast::BodyLiteral &literal, const VariableMap &variables);

RuleFormula translateRule(const ast::Rule &rule);
std::vector<RuleFormula> translateProgram(const ast::Program &program);

// The per-rule formula printed when completion is switched off: “forall .. (body -> head)” for
// definite rules, “forall .. (head -> body)” for choice rules, and “not body” for constraints
fol::Formula ruleFormulaToFormula(const RuleFormula &ruleFormula);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
