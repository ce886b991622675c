#include <anthem/HiddenPredicateElimination.h>

#include <algorithm>
#include <functional>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Hidden Predicate Elimination
//
////////////////////////////////////////////////////////////////////////////////////////////////////

PredicateDependencyGraph::PredicateDependencyGraph(const CompletionResult &result)
{
	for (const auto &external : result.externals)
		m_nodes.insert(external);

	for (const auto &definition : result.definitions)
	{
		m_nodes.insert(definition.predicate);

		auto &edges = m_edges[definition.predicate];

		for (const auto &predicate : fol::predicates(definition.body))
		{
			m_nodes.insert(predicate);
			edges.insert(predicate);
		}
	}
}

////////////////////////////////////////////////////////////////////////////////////////////////////

const std::set<PredicateSignature> &PredicateDependencyGraph::successors(const PredicateSignature &predicate) const
{
	static const std::set<PredicateSignature> none;

	const auto match = m_edges.find(predicate);

	return match == m_edges.end() ? none : match->second;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

bool PredicateDependencyGraph::hasEdge(const PredicateSignature &from, const PredicateSignature &to) const
{
	return successors(from).contains(to);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<std::vector<PredicateSignature>> PredicateDependencyGraph::stronglyConnectedComponents() const
{
	// Tarjan’s algorithm; components are completed in reverse topological order
	std::map<PredicateSignature, std::size_t> indices;
	std::map<PredicateSignature, std::size_t> lowLinks;
	std::set<PredicateSignature> onStack;
	std::vector<PredicateSignature> stack;
	std::vector<std::vector<PredicateSignature>> components;

	std::function<void(const PredicateSignature &)> visit =
		[&](const PredicateSignature &node)
		{
			const auto index = indices.size();
			indices[node] = index;
			lowLinks[node] = index;
			stack.push_back(node);
			onStack.insert(node);

			for (const auto &successor : successors(node))
			{
				if (!indices.contains(successor))
				{
					visit(successor);
					lowLinks[node] = std::min(lowLinks[node], lowLinks[successor]);
				}
				else if (onStack.contains(successor))
					lowLinks[node] = std::min(lowLinks[node], indices[successor]);
			}

			if (lowLinks[node] != indices[node])
				return;

			std::vector<PredicateSignature> component;

			while (true)
			{
				auto member = stack.back();
				stack.pop_back();
				onStack.erase(member);
				component.push_back(member);

				if (member == node)
					break;
			}

			std::sort(component.begin(), component.end());
			components.push_back(std::move(component));
		};

	for (const auto &node : m_nodes)
		if (!indices.contains(node))
			visit(node);

	return components;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

bool PredicateDependencyGraph::isOnCycle(const PredicateSignature &predicate,
	const std::set<PredicateSignature> &scope) const
{
	if (!scope.contains(predicate))
		return false;

	std::set<PredicateSignature> visited;
	std::vector<PredicateSignature> worklist{predicate};

	while (!worklist.empty())
	{
		const auto node = worklist.back();
		worklist.pop_back();

		for (const auto &successor : successors(node))
		{
			if (successor == predicate)
				return true;

			if (!scope.contains(successor) || visited.contains(successor))
				continue;

			visited.insert(successor);
			worklist.push_back(successor);
		}
	}

	return false;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::set<PredicateSignature> hiddenPredicates(const CompletionResult &result, const ast::Program &program)
{
	std::set<PredicateSignature> hidden;

	if (!program.hasShowDirective)
		return hidden;

	for (const auto &definition : result.definitions)
		if (!program.shows.contains(definition.predicate))
			hidden.insert(definition.predicate);

	return hidden;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

fol::Formula inlineDefinition(const fol::Formula &formula, const CompletedDefinition &definition)
{
	return fol::replacePredicates(formula,
		[&](const fol::Predicate &predicate) -> std::optional<fol::Formula>
		{
			if (predicate.signature() != definition.predicate)
				return std::nullopt;

			std::map<fol::Variable, fol::Term> replacements;

			for (std::size_t i = 0; i < definition.headVariables.size(); i++)
				replacements.emplace(definition.headVariables[i], predicate.arguments[i]);

			// Each use site gets its own copy of the bound variables
			return fol::substitute(fol::freshenBoundVariables(definition.body), replacements);
		});
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

EliminationResult eliminate(const CompletionResult &result, const std::set<PredicateSignature> &hidden)
{
	EliminationResult elimination{result, {}};
	auto &current = elimination.result;

	std::vector<PredicateSignature> order;

	for (const auto &definition : result.definitions)
		if (hidden.contains(definition.predicate))
			order.push_back(definition.predicate);

	// Substituting a definition may make another one refer to itself, which then blocks its
	// elimination; processing in definition order keeps the outcome deterministic
	for (const auto &predicate : order)
	{
		const auto match = std::find_if(current.definitions.begin(), current.definitions.end(),
			[&](const auto &definition){return definition.predicate == predicate;});

		if (match->kind == CompletedDefinition::Kind::OnlyIf)
		{
			elimination.warnings.push_back("cannot hide predicate “" + toString(predicate)
				+ "”: definition is not complete");
			continue;
		}

		if (PredicateDependencyGraph(current).hasEdge(predicate, predicate))
		{
			elimination.warnings.push_back("cannot hide predicate “" + toString(predicate)
				+ "” due to circular dependency");
			continue;
		}

		const auto definition = *match;
		current.definitions.erase(match);

		for (auto &other : current.definitions)
			other.body = inlineDefinition(other.body, definition);

		for (auto &constraint : current.constraints)
			constraint = inlineDefinition(constraint, definition);
	}

	return elimination;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
