#include <anthem/Formula.h>

#include <algorithm>
#include <atomic>

namespace anthem
{
namespace fol
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Formula
//
////////////////////////////////////////////////////////////////////////////////////////////////////

Variable Variable::fresh(Sort sort, VariableRole role)
{
	static std::atomic<std::uint64_t> counter{1};

	return {counter++, sort, role};
}

////////////////////////////////////////////////////////////////////////////////////////////////////

#define ANTHEM_TERM_CONSTRUCTOR(Type) \
	Term::Term(Type value) \
	:	m_node{std::make_shared<const TermNode>(TermNode{std::move(value)})} \
	{ \
	}

ANTHEM_TERM_CONSTRUCTOR(Variable)
ANTHEM_TERM_CONSTRUCTOR(SymbolicConstant)
ANTHEM_TERM_CONSTRUCTOR(IntegerConstant)
ANTHEM_TERM_CONSTRUCTOR(Arithmetic)
ANTHEM_TERM_CONSTRUCTOR(SetOperation)

#undef ANTHEM_TERM_CONSTRUCTOR

const Term::Variant &Term::variant() const
{
	return m_node->value;
}

bool Term::operator==(const Term &other) const
{
	return m_node == other.m_node || m_node->value == other.m_node->value;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

#define ANTHEM_FORMULA_CONSTRUCTOR(Type) \
	Formula::Formula(Type value) \
	:	m_node{std::make_shared<const FormulaNode>(FormulaNode{std::move(value)})} \
	{ \
	}

ANTHEM_FORMULA_CONSTRUCTOR(Boolean)
ANTHEM_FORMULA_CONSTRUCTOR(Predicate)
ANTHEM_FORMULA_CONSTRUCTOR(Comparison)
ANTHEM_FORMULA_CONSTRUCTOR(In)
ANTHEM_FORMULA_CONSTRUCTOR(Not)
ANTHEM_FORMULA_CONSTRUCTOR(And)
ANTHEM_FORMULA_CONSTRUCTOR(Or)
ANTHEM_FORMULA_CONSTRUCTOR(Implies)
ANTHEM_FORMULA_CONSTRUCTOR(Biconditional)
ANTHEM_FORMULA_CONSTRUCTOR(ForAll)
ANTHEM_FORMULA_CONSTRUCTOR(Exists)

#undef ANTHEM_FORMULA_CONSTRUCTOR

const Formula::Variant &Formula::variant() const
{
	return m_node->value;
}

bool Formula::operator==(const Formula &other) const
{
	return m_node == other.m_node || m_node->value == other.m_node->value;
}

////////////////////////////////////////////////////////////////////////////////////////////////////
// Construction
////////////////////////////////////////////////////////////////////////////////////////////////////

Formula makeTrue()
{
	return Boolean{true};
}

Formula makeFalse()
{
	return Boolean{false};
}

Formula makeAnd(std::vector<Formula> arguments)
{
	std::vector<Formula> flattened;

	for (auto &argument : arguments)
	{
		if (const auto *and_ = argument.as<And>())
			flattened.insert(flattened.end(), and_->arguments.begin(), and_->arguments.end());
		else
			flattened.push_back(std::move(argument));
	}

	if (flattened.empty())
		return makeTrue();

	if (flattened.size() == 1)
		return flattened.front();

	return And{std::move(flattened)};
}

Formula makeOr(std::vector<Formula> arguments)
{
	std::vector<Formula> flattened;

	for (auto &argument : arguments)
	{
		if (const auto *or_ = argument.as<Or>())
			flattened.insert(flattened.end(), or_->arguments.begin(), or_->arguments.end());
		else
			flattened.push_back(std::move(argument));
	}

	if (flattened.empty())
		return makeFalse();

	if (flattened.size() == 1)
		return flattened.front();

	return Or{std::move(flattened)};
}

Formula makeForAll(std::vector<Variable> variables, Formula argument)
{
	if (variables.empty())
		return argument;

	return ForAll{std::move(variables), std::move(argument)};
}

Formula makeExists(std::vector<Variable> variables, Formula argument)
{
	if (variables.empty())
		return argument;

	return Exists{std::move(variables), std::move(argument)};
}

////////////////////////////////////////////////////////////////////////////////////////////////////
// Analysis
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

void collectVariables(const Term &term, std::vector<Variable> &result, const std::set<Variable> &bound)
{
	std::visit(
		[&](const auto &term)
		{
			using T = std::decay_t<decltype(term)>;

			if constexpr (std::is_same_v<T, Variable>)
			{
				if (!bound.contains(term) && std::find(result.begin(), result.end(), term) == result.end())
					result.push_back(term);
			}
			else if constexpr (std::is_same_v<T, Arithmetic> || std::is_same_v<T, SetOperation>)
			{
				collectVariables(term.left, result, bound);
				collectVariables(term.right, result, bound);
			}
		}, term.variant());
}

void collectFreeVariables(const Formula &formula, std::vector<Variable> &result, std::set<Variable> &bound)
{
	std::visit(
		[&](const auto &formula)
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, Predicate>)
			{
				for (const auto &argument : formula.arguments)
					collectVariables(argument, result, bound);
			}
			else if constexpr (std::is_same_v<T, Comparison>)
			{
				collectVariables(formula.left, result, bound);
				collectVariables(formula.right, result, bound);
			}
			else if constexpr (std::is_same_v<T, In>)
			{
				collectVariables(formula.element, result, bound);
				collectVariables(formula.set, result, bound);
			}
			else if constexpr (std::is_same_v<T, Not>)
				collectFreeVariables(formula.argument, result, bound);
			else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>)
			{
				for (const auto &argument : formula.arguments)
					collectFreeVariables(argument, result, bound);
			}
			else if constexpr (std::is_same_v<T, Implies>)
			{
				collectFreeVariables(formula.antecedent, result, bound);
				collectFreeVariables(formula.consequent, result, bound);
			}
			else if constexpr (std::is_same_v<T, Biconditional>)
			{
				collectFreeVariables(formula.left, result, bound);
				collectFreeVariables(formula.right, result, bound);
			}
			else if constexpr (std::is_same_v<T, ForAll> || std::is_same_v<T, Exists>)
			{
				std::vector<Variable> newlyBound;

				for (const auto &variable : formula.variables)
					if (bound.insert(variable).second)
						newlyBound.push_back(variable);

				collectFreeVariables(formula.argument, result, bound);

				for (const auto &variable : newlyBound)
					bound.erase(variable);
			}
		}, formula.variant());
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::vector<Variable> freeVariablesInOrder(const Formula &formula)
{
	std::vector<Variable> result;
	std::set<Variable> bound;
	collectFreeVariables(formula, result, bound);
	return result;
}

std::set<Variable> freeVariables(const Formula &formula)
{
	const auto ordered = freeVariablesInOrder(formula);
	return {ordered.begin(), ordered.end()};
}

std::set<Variable> variables(const Term &term)
{
	std::vector<Variable> result;
	collectVariables(term, result, {});
	return {result.begin(), result.end()};
}

bool occursFree(const Variable &variable, const Formula &formula)
{
	return freeVariables(formula).contains(variable);
}

bool occurs(const Variable &variable, const Term &term)
{
	return variables(term).contains(variable);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

bool isIntegerValued(const Term &term)
{
	if (const auto *variable = term.as<Variable>())
		return variable->sort == Sort::Integer;

	return term.is<IntegerConstant>() || term.is<Arithmetic>();
}

bool isSingleValued(const Term &term)
{
	return !term.is<SetOperation>();
}

bool containsSymbolicConstant(const Term &term)
{
	if (term.is<SymbolicConstant>())
		return true;

	if (const auto *arithmetic = term.as<Arithmetic>())
		return containsSymbolicConstant(arithmetic->left) || containsSymbolicConstant(arithmetic->right);

	if (const auto *setOperation = term.as<SetOperation>())
		return containsSymbolicConstant(setOperation->left) || containsSymbolicConstant(setOperation->right);

	return false;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

template<class Callback>
void forEachSubformula(const Formula &formula, const Callback &callback)
{
	callback(formula);

	std::visit(
		[&](const auto &formula)
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, Not>)
				forEachSubformula(formula.argument, callback);
			else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>)
			{
				for (const auto &argument : formula.arguments)
					forEachSubformula(argument, callback);
			}
			else if constexpr (std::is_same_v<T, Implies>)
			{
				forEachSubformula(formula.antecedent, callback);
				forEachSubformula(formula.consequent, callback);
			}
			else if constexpr (std::is_same_v<T, Biconditional>)
			{
				forEachSubformula(formula.left, callback);
				forEachSubformula(formula.right, callback);
			}
			else if constexpr (std::is_same_v<T, ForAll> || std::is_same_v<T, Exists>)
				forEachSubformula(formula.argument, callback);
		}, formula.variant());
}

}

std::set<PredicateSignature> predicates(const Formula &formula)
{
	std::set<PredicateSignature> result;

	forEachSubformula(formula,
		[&](const Formula &subformula)
		{
			if (const auto *predicate = subformula.as<Predicate>())
				result.insert(predicate->signature());
		});

	return result;
}

bool mentions(const Formula &formula, const PredicateSignature &signature)
{
	return predicates(formula).contains(signature);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

bool isValidArithmeticOperand(const Term &term)
{
	if (const auto *variable = term.as<Variable>())
		return variable->sort == Sort::Integer;

	if (const auto *arithmetic = term.as<Arithmetic>())
		return arithmetic->binaryOperator != BinaryOperator::Division
			&& arithmetic->binaryOperator != BinaryOperator::Interval
			&& isValidArithmeticOperand(arithmetic->left) && isValidArithmeticOperand(arithmetic->right);

	return term.is<IntegerConstant>();
}

bool isValidTerm(const Term &term, bool allowSets)
{
	if (const auto *setOperation = term.as<SetOperation>())
		return allowSets && isValidTerm(setOperation->left, true) && isValidTerm(setOperation->right, true);

	if (term.is<Arithmetic>())
		return isValidArithmeticOperand(term);

	return true;
}

}

bool satisfiesInvariants(const Formula &formula, std::string *reason)
{
	bool valid = true;

	const auto fail =
		[&](const std::string &message)
		{
			if (valid && reason)
				*reason = message;

			valid = false;
		};

	forEachSubformula(formula,
		[&](const Formula &subformula)
		{
			if (const auto *predicate = subformula.as<Predicate>())
			{
				for (const auto &argument : predicate->arguments)
					if (!isValidTerm(argument, false))
						fail("set-valued or ill-sorted term in atom " + predicate->name);
			}
			else if (const auto *comparison = subformula.as<Comparison>())
			{
				if (!isValidTerm(comparison->left, false) || !isValidTerm(comparison->right, false))
					fail("set-valued or ill-sorted term in comparison");
			}
			else if (const auto *in = subformula.as<In>())
			{
				if (!isValidTerm(in->element, false))
					fail("set-valued element in membership atom");

				if (!isValidTerm(in->set, true))
					fail("ill-sorted arithmetic in membership atom");
			}
			else
			{
				const std::vector<Variable> *variables = nullptr;

				if (const auto *forAll = subformula.as<ForAll>())
					variables = &forAll->variables;
				else if (const auto *exists = subformula.as<Exists>())
					variables = &exists->variables;

				if (!variables)
					return;

				if (variables->empty())
					fail("quantifier without variables");

				const std::set<Variable> unique(variables->begin(), variables->end());

				if (unique.size() != variables->size())
					fail("duplicate quantified variable");
			}
		});

	return valid;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

class AlphaEquivalence
{
	public:
		bool equivalent(const Term &left, const Term &right)
		{
			if (left.variant().index() != right.variant().index())
				return false;

			if (const auto *leftVariable = left.as<Variable>())
			{
				const auto &rightVariable = *right.as<Variable>();

				if (leftVariable->sort != rightVariable.sort)
					return false;

				const auto leftMatch = m_leftToRight.find(leftVariable->id);
				const auto rightMatch = m_rightToLeft.find(rightVariable.id);

				if (leftMatch == m_leftToRight.end() && rightMatch == m_rightToLeft.end())
					return leftVariable->id == rightVariable.id;

				return leftMatch != m_leftToRight.end() && rightMatch != m_rightToLeft.end()
					&& leftMatch->second.back() == rightVariable.id
					&& rightMatch->second.back() == leftVariable->id;
			}

			if (const auto *leftArithmetic = left.as<Arithmetic>())
			{
				const auto &rightArithmetic = *right.as<Arithmetic>();

				return leftArithmetic->binaryOperator == rightArithmetic.binaryOperator
					&& equivalent(leftArithmetic->left, rightArithmetic.left)
					&& equivalent(leftArithmetic->right, rightArithmetic.right);
			}

			if (const auto *leftSet = left.as<SetOperation>())
			{
				const auto &rightSet = *right.as<SetOperation>();

				return leftSet->binaryOperator == rightSet.binaryOperator
					&& equivalent(leftSet->left, rightSet.left)
					&& equivalent(leftSet->right, rightSet.right);
			}

			return left == right;
		}

		bool equivalent(const Formula &left, const Formula &right)
		{
			if (left.variant().index() != right.variant().index())
				return false;

			return std::visit(
				[&](const auto &leftFormula) -> bool
				{
					using T = std::decay_t<decltype(leftFormula)>;
					const auto &rightFormula = *right.as<T>();

					if constexpr (std::is_same_v<T, Boolean>)
						return leftFormula.value == rightFormula.value;
					else if constexpr (std::is_same_v<T, Predicate>)
					{
						if (leftFormula.name != rightFormula.name
							|| leftFormula.arguments.size() != rightFormula.arguments.size())
						{
							return false;
						}

						for (std::size_t i = 0; i < leftFormula.arguments.size(); i++)
							if (!equivalent(leftFormula.arguments[i], rightFormula.arguments[i]))
								return false;

						return true;
					}
					else if constexpr (std::is_same_v<T, Comparison>)
						return leftFormula.comparisonOperator == rightFormula.comparisonOperator
							&& equivalent(leftFormula.left, rightFormula.left)
							&& equivalent(leftFormula.right, rightFormula.right);
					else if constexpr (std::is_same_v<T, In>)
						return equivalent(leftFormula.element, rightFormula.element)
							&& equivalent(leftFormula.set, rightFormula.set);
					else if constexpr (std::is_same_v<T, Not>)
						return equivalent(leftFormula.argument, rightFormula.argument);
					else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>)
					{
						if (leftFormula.arguments.size() != rightFormula.arguments.size())
							return false;

						for (std::size_t i = 0; i < leftFormula.arguments.size(); i++)
							if (!equivalent(leftFormula.arguments[i], rightFormula.arguments[i]))
								return false;

						return true;
					}
					else if constexpr (std::is_same_v<T, Implies>)
						return equivalent(leftFormula.antecedent, rightFormula.antecedent)
							&& equivalent(leftFormula.consequent, rightFormula.consequent);
					else if constexpr (std::is_same_v<T, Biconditional>)
						return equivalent(leftFormula.left, rightFormula.left)
							&& equivalent(leftFormula.right, rightFormula.right);
					else
					{
						if (leftFormula.variables.size() != rightFormula.variables.size())
							return false;

						for (std::size_t i = 0; i < leftFormula.variables.size(); i++)
						{
							if (leftFormula.variables[i].sort != rightFormula.variables[i].sort)
								return false;

							m_leftToRight[leftFormula.variables[i].id].push_back(rightFormula.variables[i].id);
							m_rightToLeft[rightFormula.variables[i].id].push_back(leftFormula.variables[i].id);
						}

						const auto result = equivalent(leftFormula.argument, rightFormula.argument);

						for (std::size_t i = 0; i < leftFormula.variables.size(); i++)
						{
							unbind(m_leftToRight, leftFormula.variables[i].id);
							unbind(m_rightToLeft, rightFormula.variables[i].id);
						}

						return result;
					}
				}, left.variant());
		}

	private:
		using Bindings = std::map<std::uint64_t, std::vector<std::uint64_t>>;

		static void unbind(Bindings &bindings, std::uint64_t id)
		{
			auto match = bindings.find(id);
			match->second.pop_back();

			if (match->second.empty())
				bindings.erase(match);
		}

		Bindings m_leftToRight;
		Bindings m_rightToLeft;
};

}

bool alphaEquivalent(const Formula &left, const Formula &right)
{
	AlphaEquivalence alphaEquivalence;
	return alphaEquivalence.equivalent(left, right);
}

////////////////////////////////////////////////////////////////////////////////////////////////////
// Transformation
////////////////////////////////////////////////////////////////////////////////////////////////////

Term substitute(const Term &term, const std::map<Variable, Term> &replacements)
{
	if (replacements.empty())
		return term;

	return std::visit(
		[&](const auto &term) -> Term
		{
			using T = std::decay_t<decltype(term)>;

			if constexpr (std::is_same_v<T, Variable>)
			{
				const auto match = replacements.find(term);
				return match == replacements.end() ? Term(term) : match->second;
			}
			else if constexpr (std::is_same_v<T, Arithmetic> || std::is_same_v<T, SetOperation>)
				return T{term.binaryOperator, substitute(term.left, replacements),
					substitute(term.right, replacements)};
			else
				return term;
		}, term.variant());
}

namespace
{

Formula substituteUnchecked(const Formula &formula, const std::map<Variable, Term> &replacements)
{
	if (replacements.empty())
		return formula;

	return std::visit(
		[&](const auto &formula) -> Formula
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, Boolean>)
				return formula;
			else if constexpr (std::is_same_v<T, Predicate>)
			{
				std::vector<Term> arguments;
				arguments.reserve(formula.arguments.size());

				for (const auto &argument : formula.arguments)
					arguments.push_back(substitute(argument, replacements));

				return Predicate{formula.name, std::move(arguments)};
			}
			else if constexpr (std::is_same_v<T, Comparison>)
				return Comparison{formula.comparisonOperator, substitute(formula.left, replacements),
					substitute(formula.right, replacements)};
			else if constexpr (std::is_same_v<T, In>)
				return In{substitute(formula.element, replacements), substitute(formula.set, replacements)};
			else if constexpr (std::is_same_v<T, Not>)
				return Not{substituteUnchecked(formula.argument, replacements)};
			else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>)
			{
				std::vector<Formula> arguments;
				arguments.reserve(formula.arguments.size());

				for (const auto &argument : formula.arguments)
					arguments.push_back(substituteUnchecked(argument, replacements));

				return T{std::move(arguments)};
			}
			else if constexpr (std::is_same_v<T, Implies>)
				return Implies{substituteUnchecked(formula.antecedent, replacements),
					substituteUnchecked(formula.consequent, replacements)};
			else if constexpr (std::is_same_v<T, Biconditional>)
				return Biconditional{substituteUnchecked(formula.left, replacements),
					substituteUnchecked(formula.right, replacements)};
			else
			{
				// Bound variables shadow replacements
				auto innerReplacements = replacements;

				for (const auto &variable : formula.variables)
					innerReplacements.erase(variable);

				const auto freeInBody = freeVariables(formula.argument);

				std::set<Variable> introduced;

				for (const auto &[variable, term] : innerReplacements)
					if (freeInBody.contains(variable))
						introduced.merge(variables(term));

				// Rename bound variables that would capture variables of the substituted terms
				auto boundVariables = formula.variables;

				for (auto &boundVariable : boundVariables)
					if (introduced.contains(boundVariable))
					{
						const auto renamed = Variable::fresh(boundVariable.sort, boundVariable.role);
						innerReplacements.emplace(boundVariable, renamed);
						boundVariable = renamed;
					}

				return T{std::move(boundVariables), substituteUnchecked(formula.argument, innerReplacements)};
			}
		}, formula.variant());
}

}

Formula substitute(const Formula &formula, const std::map<Variable, Term> &replacements)
{
	for (const auto &[variable, term] : replacements)
		if (variable.sort == Sort::Integer && !isIntegerValued(term))
			throw SortError("cannot substitute a term that is not integer-valued for an integer variable");

	return substituteUnchecked(formula, replacements);
}

Formula substitute(const Formula &formula, const Variable &variable, const Term &term)
{
	return substitute(formula, std::map<Variable, Term>{{variable, term}});
}

////////////////////////////////////////////////////////////////////////////////////////////////////

Formula freshenBoundVariables(const Formula &formula)
{
	return std::visit(
		[&](const auto &formula) -> Formula
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, Boolean> || std::is_same_v<T, Predicate>
				|| std::is_same_v<T, Comparison> || std::is_same_v<T, In>)
			{
				return formula;
			}
			else if constexpr (std::is_same_v<T, Not>)
				return Not{freshenBoundVariables(formula.argument)};
			else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>)
			{
				std::vector<Formula> arguments;

				for (const auto &argument : formula.arguments)
					arguments.push_back(freshenBoundVariables(argument));

				return T{std::move(arguments)};
			}
			else if constexpr (std::is_same_v<T, Implies>)
				return Implies{freshenBoundVariables(formula.antecedent),
					freshenBoundVariables(formula.consequent)};
			else if constexpr (std::is_same_v<T, Biconditional>)
				return Biconditional{freshenBoundVariables(formula.left), freshenBoundVariables(formula.right)};
			else
			{
				std::vector<Variable> renamed;
				std::map<Variable, Term> replacements;

				for (const auto &variable : formula.variables)
				{
					renamed.push_back(Variable::fresh(variable.sort, variable.role));
					replacements.emplace(variable, renamed.back());
				}

				return T{std::move(renamed),
					freshenBoundVariables(substituteUnchecked(formula.argument, replacements))};
			}
		}, formula.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

Formula replacePredicates(const Formula &formula,
	const std::function<std::optional<Formula>(const Predicate &)> &replacement)
{
	return std::visit(
		[&](const auto &formula) -> Formula
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, Predicate>)
			{
				if (auto replaced = replacement(formula))
					return std::move(*replaced);

				return formula;
			}
			else if constexpr (std::is_same_v<T, Boolean> || std::is_same_v<T, Comparison>
				|| std::is_same_v<T, In>)
			{
				return formula;
			}
			else if constexpr (std::is_same_v<T, Not>)
				return Not{replacePredicates(formula.argument, replacement)};
			else if constexpr (std::is_same_v<T, And>)
			{
				std::vector<Formula> arguments;

				for (const auto &argument : formula.arguments)
					arguments.push_back(replacePredicates(argument, replacement));

				return makeAnd(std::move(arguments));
			}
			else if constexpr (std::is_same_v<T, Or>)
			{
				std::vector<Formula> arguments;

				for (const auto &argument : formula.arguments)
					arguments.push_back(replacePredicates(argument, replacement));

				return makeOr(std::move(arguments));
			}
			else if constexpr (std::is_same_v<T, Implies>)
				return Implies{replacePredicates(formula.antecedent, replacement),
					replacePredicates(formula.consequent, replacement)};
			else if constexpr (std::is_same_v<T, Biconditional>)
				return Biconditional{replacePredicates(formula.left, replacement),
					replacePredicates(formula.right, replacement)};
			else
				return T{formula.variables, replacePredicates(formula.argument, replacement)};
		}, formula.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////
// Integer annotations
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string format(const IntegerAnnotation &annotation)
{
	return "int(" + toString(annotation.predicate) + "@" + std::to_string(annotation.position) + ")";
}

Formula expandAnnotation(const IntegerAnnotation &annotation)
{
	std::vector<Variable> arguments;
	std::vector<Term> argumentTerms;

	for (std::size_t i = 0; i < annotation.predicate.arity; i++)
	{
		arguments.push_back(Variable::fresh(Sort::General));
		argumentTerms.emplace_back(arguments.back());
	}

	const auto integer = Variable::fresh(Sort::Integer);

	return ForAll{arguments,
		Implies{
			Predicate{annotation.predicate.name, std::move(argumentTerms)},
			Exists{{integer},
				Comparison{ComparisonOperator::Equal, arguments.at(annotation.position - 1), integer}}}};
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}
