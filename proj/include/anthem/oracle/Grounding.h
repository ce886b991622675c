#ifndef __ANTHEM__ORACLE__GROUNDING_H
#define __ANTHEM__ORACLE__GROUNDING_H

#include <optional>
#include <set>
#include <vector>

#include <anthem/Program.h>
#include <anthem/oracle/Interpretation.h>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Grounding
//
// Variables range over the domain, and so do the values of terms that are used as atom arguments
// or compared. Atoms outside of the domain are false. External atoms are replaced by their truth
// values in the given external input.
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct GroundRule
{
	enum class Kind
	{
		Basic,
		Choice,
		Constraint,
	};

	Kind kind;
	// Unset for constraints
	std::optional<GroundAtom> head;
	std::vector<GroundAtom> positiveBody;
	std::vector<GroundAtom> negativeBody;

	auto operator<=>(const GroundRule &other) const = default;
	bool operator==(const GroundRule &other) const = default;
};

std::string toString(const GroundRule &rule);

struct GroundProgram
{
	// Duplicate-free
	std::vector<GroundRule> rules;

	std::set<GroundAtom> atoms() const;
	std::set<GroundAtom> headAtoms() const;
};

// Rules whose positive body mentions atoms that no rule can derive are dropped, and so are
// negative literals over such atoms, unless pruning is disabled
GroundProgram ground(const ast::Program &program, const Domain &domain, const Interpretation &externalInput,
	bool pruneUnderivable = true);

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
