#include <anthem/oracle/Evaluation.h>

#include <algorithm>
#include <map>

#include <anthem/oracle/StableModels.h>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Evaluation
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

Truth negate(Truth truth)
{
	switch (truth)
	{
		case Truth::False:
			return Truth::True;
		case Truth::True:
			return Truth::False;
		default:
			return Truth::Unknown;
	}
}

Truth fromBool(bool value)
{
	return value ? Truth::True : Truth::False;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

class Evaluator
{
	public:
		Evaluator(const Domain &domain, const AtomTruth &atomTruth)
		:	m_domain{domain},
			m_atomTruth{atomTruth},
			m_generalValues{domain.generalValues()},
			m_integerValues{domain.integerValues()}
		{
		}

		Truth evaluate(const fol::Formula &formula)
		{
			return std::visit(
				[&](const auto &formula) -> Truth
				{
					using T = std::decay_t<decltype(formula)>;

					if constexpr (std::is_same_v<T, fol::Boolean>)
						return fromBool(formula.value);
					else if constexpr (std::is_same_v<T, fol::Predicate>)
						return evaluatePredicate(formula);
					else if constexpr (std::is_same_v<T, fol::Comparison>)
						return evaluateComparison(formula);
					else if constexpr (std::is_same_v<T, fol::In>)
					{
						const auto element = values(formula.element);
						const auto set = values(formula.set);

						for (const auto &value : element.elements())
							if (set.contains(value))
								return Truth::True;

						return Truth::False;
					}
					else if constexpr (std::is_same_v<T, fol::Not>)
						return negate(evaluate(formula.argument));
					else if constexpr (std::is_same_v<T, fol::And>)
					{
						auto result = Truth::True;

						for (const auto &argument : formula.arguments)
						{
							result = std::min(result, evaluate(argument));

							if (result == Truth::False)
								break;
						}

						return result;
					}
					else if constexpr (std::is_same_v<T, fol::Or>)
					{
						auto result = Truth::False;

						for (const auto &argument : formula.arguments)
						{
							result = std::max(result, evaluate(argument));

							if (result == Truth::True)
								break;
						}

						return result;
					}
					else if constexpr (std::is_same_v<T, fol::Implies>)
					{
						const auto antecedent = evaluate(formula.antecedent);

						if (antecedent == Truth::False)
							return Truth::True;

						return std::max(negate(antecedent), evaluate(formula.consequent));
					}
					else if constexpr (std::is_same_v<T, fol::Biconditional>)
					{
						const auto left = evaluate(formula.left);

						if (left == Truth::Unknown)
							return Truth::Unknown;

						const auto right = evaluate(formula.right);

						if (right == Truth::Unknown)
							return Truth::Unknown;

						return fromBool(left == right);
					}
					else if constexpr (std::is_same_v<T, fol::ForAll>)
						return evaluateQuantifier(formula.variables, 0, formula.argument, Truth::False);
					else
						return evaluateQuantifier(formula.variables, 0, formula.argument, Truth::True);
				}, formula.variant());
		}

		ValueSet values(const fol::Term &term)
		{
			return std::visit(
				[&](const auto &term) -> ValueSet
				{
					using T = std::decay_t<decltype(term)>;

					if constexpr (std::is_same_v<T, fol::Variable>)
					{
						for (auto binding = m_bindings.rbegin(); binding != m_bindings.rend(); binding++)
							if (binding->first == term.id)
								return ValueSet::singleton(binding->second);

						throw LogicError("cannot evaluate a formula with free variables");
					}
					else if constexpr (std::is_same_v<T, fol::SymbolicConstant>)
						return ValueSet::singleton(Value::symbol(term.name));
					else if constexpr (std::is_same_v<T, fol::IntegerConstant>)
						return ValueSet::singleton(Value::integer(term.value));
					else
						return apply(term.binaryOperator, values(term.left), values(term.right));
				}, term.variant());
		}

	private:
		Truth evaluatePredicate(const fol::Predicate &predicate)
		{
			GroundAtom atom{predicate.name, {}};
			atom.arguments.reserve(predicate.arguments.size());

			for (const auto &argument : predicate.arguments)
			{
				const auto value = values(argument).single();

				if (!value || !m_domain.contains(*value))
					return Truth::False;

				atom.arguments.push_back(*value);
			}

			return m_atomTruth(atom);
		}

		Truth evaluateComparison(const fol::Comparison &comparison)
		{
			const auto left = values(comparison.left).elements();
			const auto right = values(comparison.right).elements();

			for (const auto &leftValue : left)
				for (const auto &rightValue : right)
				{
					const auto order = leftValue <=> rightValue;
					bool holds = false;

					switch (comparison.comparisonOperator)
					{
						case ComparisonOperator::Equal:
							holds = order == 0;
							break;
						case ComparisonOperator::NotEqual:
							holds = order != 0;
							break;
						case ComparisonOperator::Less:
							holds = order < 0;
							break;
						case ComparisonOperator::LessEqual:
							holds = order <= 0;
							break;
						case ComparisonOperator::Greater:
							holds = order > 0;
							break;
						case ComparisonOperator::GreaterEqual:
							holds = order >= 0;
							break;
					}

					if (holds)
						return Truth::True;
				}

			return Truth::False;
		}

		// Universal quantification stops at the first false instance, existential quantification at
		// the first true one
		Truth evaluateQuantifier(const std::vector<fol::Variable> &variables, std::size_t index,
			const fol::Formula &argument, Truth decisive)
		{
			if (index == variables.size())
				return evaluate(argument);

			const auto &variable = variables[index];
			const auto &range = variable.sort == fol::Sort::Integer ? m_integerValues : m_generalValues;

			auto result = negate(decisive);

			for (const auto &value : range)
			{
				m_bindings.emplace_back(variable.id, value);
				const auto truth = evaluateQuantifier(variables, index + 1, argument, decisive);
				m_bindings.pop_back();

				if (truth == decisive)
					return decisive;

				if (truth == Truth::Unknown)
					result = Truth::Unknown;
			}

			return result;
		}

		const Domain &m_domain;
		const AtomTruth &m_atomTruth;
		const std::vector<Value> m_generalValues;
		const std::vector<Value> m_integerValues;
		std::vector<std::pair<std::uint64_t, Value>> m_bindings;
};

}

////////////////////////////////////////////////////////////////////////////////////////////////////

Truth evaluate(const fol::Formula &formula, const Domain &domain, const AtomTruth &atomTruth)
{
	return Evaluator(domain, atomTruth).evaluate(formula);
}

bool evaluate(const fol::Formula &formula, const Interpretation &interpretation, const Domain &domain)
{
	const AtomTruth atomTruth =
		[&](const GroundAtom &atom)
		{
			return fromBool(interpretation.contains(atom));
		};

	return evaluate(formula, domain, atomTruth) == Truth::True;
}

ValueSet evaluate(const fol::Term &term)
{
	const AtomTruth atomTruth = [](const GroundAtom &){return Truth::Unknown;};
	const Domain domain;

	return Evaluator(domain, atomTruth).values(term);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

class ModelSearch
{
	public:
		ModelSearch(const std::vector<fol::Formula> &formulas, const Domain &domain,
			const std::set<PredicateSignature> &fixedPredicates, const Interpretation &fixed)
		:	m_formulas{formulas},
			m_domain{domain},
			m_fixedPredicates{fixedPredicates},
			m_fixed{fixed}
		{
			for (const auto &formula : formulas)
				for (const auto &predicate : fol::predicates(formula))
					if (!fixedPredicates.contains(predicate))
						for (auto &atom : groundAtoms(predicate, domain))
							if (!m_indices.contains(atom))
							{
								m_indices.emplace(atom, m_atoms.size());
								m_atoms.push_back(std::move(atom));
							}

			m_atomTruth =
				[this](const GroundAtom &atom)
				{
					if (m_fixedPredicates.contains(atom.signature()))
						return fromBool(m_fixed.contains(atom));

					const auto match = m_indices.find(atom);

					if (match == m_indices.end())
						return Truth::False;

					return (*m_state)[match->second];
				};
		}

		std::vector<Interpretation> run(std::size_t searchBudget)
		{
			std::vector<Truth> state(m_atoms.size(), Truth::Unknown);

			if (!propagate(state))
				return {};

			const auto open = std::count(state.begin(), state.end(), Truth::Unknown);

			if (static_cast<std::size_t>(open) > searchBudget)
				throw BudgetError("model search has " + std::to_string(open) + " open atoms after propagation, budget is "
					+ std::to_string(searchBudget));

			search(std::move(state));

			std::sort(m_models.begin(), m_models.end());

			return std::move(m_models);
		}

	private:
		Truth evaluateAll(const std::vector<Truth> &state)
		{
			m_state = &state;
			auto result = Truth::True;

			for (const auto &formula : m_formulas)
			{
				result = std::min(result, evaluate(formula, m_domain, m_atomTruth));

				if (result == Truth::False)
					break;
			}

			return result;
		}

		// Failed-literal probing: an open atom whose assignment falsifies a formula takes the other
		// truth value. Returns false on conflict.
		bool propagate(std::vector<Truth> &state)
		{
			if (evaluateAll(state) == Truth::False)
				return false;

			for (bool changed = true; changed;)
			{
				changed = false;

				for (std::size_t i = 0; i < state.size(); i++)
				{
					if (state[i] != Truth::Unknown)
						continue;

					state[i] = Truth::True;
					const auto canBeTrue = evaluateAll(state) != Truth::False;
					state[i] = Truth::False;
					const auto canBeFalse = evaluateAll(state) != Truth::False;
					state[i] = Truth::Unknown;

					if (!canBeTrue && !canBeFalse)
						return false;

					if (!canBeTrue || !canBeFalse)
					{
						state[i] = canBeTrue ? Truth::True : Truth::False;
						changed = true;
					}
				}
			}

			return true;
		}

		void search(std::vector<Truth> state)
		{
			const auto open = std::find(state.begin(), state.end(), Truth::Unknown);

			if (open == state.end())
			{
				if (evaluateAll(state) != Truth::True)
					return;

				Interpretation model;

				for (std::size_t i = 0; i < state.size(); i++)
					if (state[i] == Truth::True)
						model.insert(m_atoms[i]);

				m_models.push_back(std::move(model));
				return;
			}

			const auto index = static_cast<std::size_t>(open - state.begin());

			for (const auto truth : {Truth::False, Truth::True})
			{
				auto branch = state;
				branch[index] = truth;

				if (propagate(branch))
					search(std::move(branch));
			}
		}

		const std::vector<fol::Formula> &m_formulas;
		const Domain &m_domain;
		const std::set<PredicateSignature> &m_fixedPredicates;
		const Interpretation &m_fixed;

		std::vector<GroundAtom> m_atoms;
		std::map<GroundAtom, std::size_t> m_indices;
		const std::vector<Truth> *m_state = nullptr;
		AtomTruth m_atomTruth;
		std::vector<Interpretation> m_models;
};

}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<Interpretation> formulaModels(const std::vector<fol::Formula> &formulas, const Domain &domain,
	const std::set<PredicateSignature> &fixedPredicates, const Interpretation &fixed, std::size_t searchBudget)
{
	return ModelSearch(formulas, domain, fixedPredicates, fixed).run(searchBudget);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}
