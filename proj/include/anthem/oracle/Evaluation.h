#ifndef __ANTHEM__ORACLE__EVALUATION_H
#define __ANTHEM__ORACLE__EVALUATION_H

#include <functional>
#include <set>
#include <vector>

#include <anthem/Formula.h>
#include <anthem/Values.h>
#include <anthem/oracle/Interpretation.h>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Evaluation
//
// Finite-domain truth of closed formulas. General quantifiers range over the domain, integer
// quantifiers over its integers. Atoms with arguments outside of the domain are false.
//
////////////////////////////////////////////////////////////////////////////////////////////////////

enum class Truth
{
	False,
	Unknown,
	True,
};

using AtomTruth = std::function<Truth(const GroundAtom &)>;

// Kleene three-valued evaluation; throws LogicError on free variables
Truth evaluate(const fol::Formula &formula, const Domain &domain, const AtomTruth &atomTruth);

bool evaluate(const fol::Formula &formula, const Interpretation &interpretation, const Domain &domain);

// Values of a closed term
ValueSet evaluate(const fol::Term &term);

////////////////////////////////////////////////////////////////////////////////////////////////////

constexpr std::size_t DefaultSearchBudget = 40;

// All interpretations over the domain that satisfy the formulas and agree with the fixed
// interpretation on the fixed predicates. The result contains atoms of the other predicates
// occurring in the formulas only. Unit propagation by failed-literal probing keeps the search
// small; throws BudgetError when more than the budgeted atoms remain open after the initial
// propagation.
std::vector<Interpretation> formulaModels(const std::vector<fol::Formula> &formulas, const Domain &domain,
	const std::set<PredicateSignature> &fixedPredicates, const Interpretation &fixed,
	std::size_t searchBudget = DefaultSearchBudget);

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
