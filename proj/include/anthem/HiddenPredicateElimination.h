#ifndef __ANTHEM__HIDDEN_PREDICATE_ELIMINATION_H
#define __ANTHEM__HIDDEN_PREDICATE_ELIMINATION_H

#include <map>
#include <set>
#include <string>
#include <vector>

#include <anthem/Completion.h>
#include <anthem/Program.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Hidden Predicate Elimination
//
////////////////////////////////////////////////////////////////////////////////////////////////////

// Edges lead from a defined predicate to the predicates its completed definition mentions
class PredicateDependencyGraph
{
	public:
		explicit PredicateDependencyGraph(const CompletionResult &result);

		const std::set<PredicateSignature> &nodes() const
		{
			return m_nodes;
		}

		const std::set<PredicateSignature> &successors(const PredicateSignature &predicate) const;
		bool hasEdge(const PredicateSignature &from, const PredicateSignature &to) const;

		// Strongly connected components in reverse topological order (dependencies first)
		std::vector<std::vector<PredicateSignature>> stronglyConnectedComponents() const;

		// Whether the predicate lies on a cycle whose nodes all belong to scope
		bool isOnCycle(const PredicateSignature &predicate, const std::set<PredicateSignature> &scope) const;

	private:
		std::set<PredicateSignature> m_nodes;
		std::map<PredicateSignature, std::set<PredicateSignature>> m_edges;
};

////////////////////////////////////////////////////////////////////////////////////////////////////

// Defined predicates that are not shown; nothing is hidden without #show directives
std::set<PredicateSignature> hiddenPredicates(const CompletionResult &result, const ast::Program &program);

struct EliminationResult
{
	CompletionResult result;
	std::vector<std::string> warnings;
};

// Replaces hidden predicates by their completed definitions, one at a time in definition order.
// Predicates with incomplete (choice) definitions and predicates whose definition comes to refer to
// itself are kept, with a warning.
EliminationResult eliminate(const CompletionResult &result, const std::set<PredicateSignature> &hidden);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
