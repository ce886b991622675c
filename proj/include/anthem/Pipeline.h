#ifndef __ANTHEM__PIPELINE_H
#define __ANTHEM__PIPELINE_H

#include <string>
#include <vector>

#include <anthem/Completion.h>
#include <anthem/Formula.h>
#include <anthem/Program.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Pipeline
//
// translate → complete → hide → simplify → detect integers → simplify
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct TranslationOptions
{
	bool complete = true;
	bool simplify = true;
	bool detectIntegers = true;
};

struct TranslationOutput
{
	// Definitions in order, then constraints
	std::vector<fol::Formula> formulas;
	std::vector<fol::IntegerAnnotation> annotations;
	std::vector<std::string> warnings;
	// Set when completion ran
	CompletionResult completion;

	// One formula or annotation per line, numbering variables across the whole output
	std::string text() const;
};

TranslationOutput translate(const ast::Program &program, const TranslationOptions &options = {});

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
