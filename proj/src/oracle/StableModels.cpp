#include <anthem/oracle/StableModels.h>

#include <algorithm>
#include <map>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// StableModels
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::set<GroundAtom> guessAtoms(const GroundProgram &program)
{
	std::set<GroundAtom> result;

	for (const auto &rule : program.rules)
	{
		if (rule.kind == GroundRule::Kind::Choice)
			result.insert(*rule.head);

		result.insert(rule.negativeBody.begin(), rule.negativeBody.end());
	}

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

bool holds(const std::vector<GroundAtom> &atoms, const std::set<GroundAtom> &interpretation)
{
	return std::all_of(atoms.begin(), atoms.end(),
		[&](const auto &atom){return interpretation.contains(atom);});
}

bool holdsNone(const std::vector<GroundAtom> &atoms, const std::set<GroundAtom> &interpretation)
{
	return std::none_of(atoms.begin(), atoms.end(),
		[&](const auto &atom){return interpretation.contains(atom);});
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<Interpretation> stableModels(const GroundProgram &program, std::size_t guessBudget)
{
	const auto guessSet = guessAtoms(program);

	if (guessSet.size() > guessBudget)
		throw BudgetError("stable model enumeration needs " + std::to_string(guessSet.size())
			+ " guessed atoms, budget is " + std::to_string(guessBudget));

	const std::vector<GroundAtom> guessList(guessSet.begin(), guessSet.end());

	std::vector<Interpretation> result;

	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << guessList.size()); mask++)
	{
		std::set<GroundAtom> guess;

		for (std::size_t i = 0; i < guessList.size(); i++)
			if (mask & (std::uint64_t{1} << i))
				guess.insert(guessList[i]);

		// Least model of the reduct under the guess
		Interpretation model;

		for (bool changed = true; changed;)
		{
			changed = false;

			for (const auto &rule : program.rules)
			{
				if (rule.kind == GroundRule::Kind::Constraint || model.contains(*rule.head))
					continue;

				if (rule.kind == GroundRule::Kind::Choice && !guess.contains(*rule.head))
					continue;

				if (holds(rule.positiveBody, model) && holdsNone(rule.negativeBody, guess))
				{
					model.insert(*rule.head);
					changed = true;
				}
			}
		}

		const auto agrees = std::all_of(guessList.begin(), guessList.end(),
			[&](const auto &atom){return model.contains(atom) == guess.contains(atom);});

		if (!agrees)
			continue;

		const auto violatesConstraint = std::any_of(program.rules.begin(), program.rules.end(),
			[&](const auto &rule)
			{
				return rule.kind == GroundRule::Kind::Constraint && holds(rule.positiveBody, model)
					&& holdsNone(rule.negativeBody, model);
			});

		if (!violatesConstraint)
			result.push_back(std::move(model));
	}

	std::sort(result.begin(), result.end());

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::optional<std::vector<GroundAtom>> findPositiveCycle(const GroundProgram &program)
{
	std::map<GroundAtom, std::set<GroundAtom>> successors;

	for (const auto &rule : program.rules)
		if (rule.head)
			successors[*rule.head].insert(rule.positiveBody.begin(), rule.positiveBody.end());

	enum class State
	{
		Unvisited,
		Active,
		Done,
	};

	std::map<GroundAtom, State> states;
	std::vector<GroundAtom> path;
	std::optional<std::vector<GroundAtom>> cycle;

	const auto visit =
		[&](const auto &visit, const GroundAtom &atom) -> void
		{
			states[atom] = State::Active;
			path.push_back(atom);

			for (const auto &successor : successors[atom])
			{
				if (cycle)
					return;

				const auto state = states[successor];

				if (state == State::Active)
				{
					const auto start = std::find(path.begin(), path.end(), successor);
					cycle.emplace(start, path.end());
					cycle->push_back(successor);
					return;
				}

				if (state == State::Unvisited)
					visit(visit, successor);
			}

			path.pop_back();
			states[atom] = State::Done;
		};

	for (const auto &rule : program.rules)
	{
		if (cycle)
			break;

		if (rule.head && states[*rule.head] == State::Unvisited)
			visit(visit, *rule.head);
	}

	return cycle;
}

bool isTight(const GroundProgram &program)
{
	return !findPositiveCycle(program);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}
