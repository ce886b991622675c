#ifndef __ANTHEM__ORACLE__STABLE_MODELS_H
#define __ANTHEM__ORACLE__STABLE_MODELS_H

#include <optional>
#include <vector>

#include <anthem/Common.h>
#include <anthem/oracle/Grounding.h>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// StableModels
//
////////////////////////////////////////////////////////////////////////////////////////////////////

// Raised when an exhaustive enumeration would exceed its budget
class BudgetError : public Error
{
	public:
		using Error::Error;
};

constexpr std::size_t DefaultGuessBudget = 22;

// Atoms whose truth has to be guessed: choice heads and atoms under negation
std::set<GroundAtom> guessAtoms(const GroundProgram &program);

// Enumerates subsets of the guess atoms. For each guess, the least model of the program with
// negation and choices evaluated under the guess is a stable model if it agrees with the guess and
// satisfies all constraints.
std::vector<Interpretation> stableModels(const GroundProgram &program,
	std::size_t guessBudget = DefaultGuessBudget);

// A cycle in the positive dependency graph (head to positive body atoms), closing at its first atom
std::optional<std::vector<GroundAtom>> findPositiveCycle(const GroundProgram &program);

bool isTight(const GroundProgram &program);

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
