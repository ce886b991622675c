#ifndef __ANTHEM__SIMPLIFICATION_H
#define __ANTHEM__SIMPLIFICATION_H

#include <optional>
#include <string>
#include <vector>

#include <anthem/Completion.h>
#include <anthem/Formula.h>
#include <anthem/Values.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Simplification
//
////////////////////////////////////////////////////////////////////////////////////////////////////

enum class Rewrite
{
	// “X in t” becomes “X = v” if t has the single value v, and #false if t has none
	MembershipToEquality,
	// “exists Z (Z = t and F)” becomes F with t in place of Z
	EqualityElimination,
	// Neutral and absorbing truth values in connectives and quantifiers
	BooleanIdentity,
	// “not not F” becomes F
	DoubleNegation,
	// At the root: “not exists X (L1 and ... and Lk)” becomes “forall X (not L1 or ... or not Lk)”
	ConstraintToUniversal,
	// At the root: “forall X (not A or B)” becomes “forall X (A -> B)”
	ClauseToImplication,
	// Quantified variables without occurrences are dropped
	QuantifierPruning,
};

const std::vector<Rewrite> &allRewrites();
std::string toString(Rewrite rewrite);

// Whether the rewrite is applied to the root of a sentence only
bool isRootRewrite(Rewrite rewrite);

// One pass of a single rewrite: bottom-up over all subformulas, or at the root
fol::Formula applyRewrite(Rewrite rewrite, const fol::Formula &formula);

// Values of a term without variables and symbolic constants; nullopt for other terms
std::optional<ValueSet> groundValues(const fol::Term &term);

////////////////////////////////////////////////////////////////////////////////////////////////////

// Fixpoint of all rewrites (throws LogicError after 1000 passes)
fol::Formula simplifyFormula(const fol::Formula &formula);
// Fixpoint of the rewrites that apply below the root
fol::Formula simplifySubformulas(const fol::Formula &formula);

// Definition bodies are simplified below the root, constraints as sentences
CompletionResult simplify(const CompletionResult &result);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
