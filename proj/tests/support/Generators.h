#ifndef __ANTHEM__TESTS__GENERATORS_H
#define __ANTHEM__TESTS__GENERATORS_H

#include <random>
#include <set>
#include <string>
#include <vector>

#include <anthem/Formula.h>
#include <anthem/Program.h>
#include <anthem/Values.h>
#include <anthem/oracle/Grounding.h>
#include <anthem/oracle/Interpretation.h>

namespace anthem
{
namespace test
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Generators
//
// Random inputs for property tests and independent reference implementations
//
////////////////////////////////////////////////////////////////////////////////////////////////////

using Random = std::mt19937_64;

// Source text of a safe program with at most 3 predicates of arity at most 2 and at most 5 rules.
// Positive body literals only use predicates introduced before the head predicate, which keeps the
// program tight. Constants are a, 1, and 2; arithmetic never occurs in negative literals.
std::string randomTightProgram(Random &random);

// Values of random programs. Each rule adds at most 1 to a body value and at most 1 more in its
// head, so chains over three predicates plus a constraint stay below 9. With every value the
// program can compute inside the domain, bounded and unbounded semantics agree.
oracle::Domain randomProgramDomain();

////////////////////////////////////////////////////////////////////////////////////////////////////

// Closed formulas over p/1, q/2, and r/0 with the constants a, 0, 1, 2, biased towards the shapes
// the simplification rewrites match. Arithmetic is set-valued only, so that terms always have
// values in the domain or none.
fol::Formula randomFormula(Random &random);

oracle::Domain randomFormulaDomain();
std::vector<PredicateSignature> randomFormulaSignature();

oracle::Interpretation randomInterpretation(Random &random, const std::vector<PredicateSignature> &predicates,
	const oracle::Domain &domain);

////////////////////////////////////////////////////////////////////////////////////////////////////

// Ground terms over small integers and the symbols a and b
ast::Term randomGroundTerm(Random &random, std::size_t depth = 3);

// Values by enumerating all pairs of operand values
std::set<Value> naiveValues(const ast::Term &term);

////////////////////////////////////////////////////////////////////////////////////////////////////

// Propositional ground programs over atoms x(0), ..., x(atomCount - 1), tight or not
oracle::GroundProgram randomGroundProgram(Random &random, std::size_t atomCount, std::size_t ruleCount);

// Stable models by testing every subset of the atoms against the reduct definition
std::vector<oracle::Interpretation> naiveStableModels(const oracle::GroundProgram &program);

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
