#ifndef __ANTHEM__INTEGER_DETECTION_H
#define __ANTHEM__INTEGER_DETECTION_H

#include <set>
#include <vector>

#include <anthem/Completion.h>
#include <anthem/Formula.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Integer Detection
//
// A formula forces a variable to be an integer if the variable is an integer in every
// interpretation satisfying the formula (given the annotations found so far). Argument positions
// whose head variable is forced by the definition body are annotated, and quantified variables
// that can only matter for integer values are replaced by integer variables.
//
////////////////////////////////////////////////////////////////////////////////////////////////////

using IntegerAnnotations = std::set<fol::IntegerAnnotation>;

bool forcesInteger(const fol::Formula &formula, const fol::Variable &variable,
	const IntegerAnnotations &annotations);

// Whether a universally quantified formula is trivially true unless the variable is an integer
bool guardsInteger(const fol::Formula &formula, const fol::Variable &variable,
	const IntegerAnnotations &annotations);

// Replaces existentially quantified variables forced to be integers and universally quantified
// variables guarded by integer conditions with integer variables
fol::Formula narrowVariables(const fol::Formula &formula, const IntegerAnnotations &annotations);

// Turns set operations (+, -, *) over integer-valued operands into arithmetic terms
fol::Formula arithmetize(const fol::Formula &formula);

struct IntegerDetectionResult
{
	CompletionResult result;
	// In definition order, then by position
	std::vector<fol::IntegerAnnotation> annotations;
};

IntegerDetectionResult detectIntegers(const CompletionResult &result);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
