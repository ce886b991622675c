#include "Generators.h"

#include <algorithm>

namespace anthem
{
namespace test
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Generators
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

std::size_t uniform(Random &random, std::size_t lower, std::size_t upper)
{
	return std::uniform_int_distribution<std::size_t>(lower, upper)(random);
}

bool chance(Random &random, double probability)
{
	return std::bernoulli_distribution(probability)(random);
}

template<class T>
const T &pick(Random &random, const std::vector<T> &values)
{
	return values[uniform(random, 0, values.size() - 1)];
}

////////////////////////////////////////////////////////////////////////////////////////////////////

struct ProgramGenerator
{
	struct Predicate
	{
		std::string name;
		std::size_t arity;
	};

	Random &random;
	std::vector<Predicate> predicates;

	const std::vector<std::string> constants{"a", "1", "2"};
	const std::vector<std::string> variableNames{"X", "Y", "Z"};

	static std::string atom(const Predicate &predicate, const std::vector<std::string> &arguments)
	{
		if (arguments.empty())
			return predicate.name;

		std::string result = predicate.name + "(";

		for (std::size_t i = 0; i < arguments.size(); i++)
			result += (i > 0 ? ", " : "") + arguments[i];

		return result + ")";
	}

	std::string simpleTerm(const std::vector<std::string> &bound)
	{
		if (!bound.empty() && chance(random, 0.6))
			return pick(random, bound);

		return pick(random, constants);
	}

	std::string rule()
	{
		const auto roll = uniform(random, 0, 99);
		const auto isConstraint = roll < 15;
		const auto isChoice = !isConstraint && roll < 40;
		const auto headIndex = uniform(random, 0, predicates.size() - 1);

		std::vector<std::string> body;
		std::vector<std::string> bound;

		const auto bind =
			[&](const std::string &variable)
			{
				if (std::find(bound.begin(), bound.end(), variable) == bound.end())
					bound.push_back(variable);
			};

		// Positive literals over earlier predicates only
		const auto positiveLimit = isConstraint ? predicates.size() : headIndex;

		if (positiveLimit > 0)
			for (auto count = uniform(random, 0, 2); count > 0; count--)
			{
				const auto &predicate = predicates[uniform(random, 0, positiveLimit - 1)];
				std::vector<std::string> arguments;

				for (std::size_t i = 0; i < predicate.arity; i++)
				{
					const auto kind = uniform(random, 0, 99);

					if (kind < 55)
					{
						arguments.push_back(pick(random, variableNames));
						bind(arguments.back());
					}
					else if (kind < 85)
						arguments.push_back(pick(random, constants));
					else
						arguments.push_back("_");
				}

				body.push_back(atom(predicate, arguments));
			}

		if (chance(random, 0.4))
		{
			const auto variable = pick(random, variableNames);
			std::vector<std::string> values{"1..2", "a", "1", "2"};

			if (!bound.empty())
				values.push_back(pick(random, bound) + " + 1");

			body.push_back(variable + " = " + pick(random, values));
			bind(variable);
		}

		for (auto count = uniform(random, 0, 2); count > 0; count--)
		{
			const auto &predicate = pick(random, predicates);
			std::vector<std::string> arguments;

			for (std::size_t i = 0; i < predicate.arity; i++)
				arguments.push_back(chance(random, 0.15) ? "_" : simpleTerm(bound));

			body.push_back("not " + atom(predicate, arguments));
		}

		if (!bound.empty() && chance(random, 0.25))
		{
			static const std::vector<std::string> operators{"=", "!=", "<", "<=", ">", ">="};
			body.push_back(pick(random, bound) + " " + pick(random, operators) + " " + simpleTerm(bound));
		}

		std::string result;

		if (isConstraint)
		{
			if (body.empty())
				body.push_back("not " + atom(predicates.front(),
					std::vector<std::string>(predicates.front().arity, "a")));
		}
		else
		{
			const auto &predicate = predicates[headIndex];
			std::vector<std::string> arguments;

			for (std::size_t i = 0; i < predicate.arity; i++)
			{
				const auto kind = uniform(random, 0, 99);

				if (kind < 45 && !bound.empty())
					arguments.push_back(pick(random, bound));
				else if (kind < 60)
					arguments.push_back("1..2");
				else if (kind < 75 && !bound.empty())
					arguments.push_back(pick(random, bound) + " + 1");
				else
					arguments.push_back(pick(random, constants));
			}

			result = atom(predicate, arguments);

			if (isChoice)
				result = "{" + result + "}";
		}

		if (!body.empty())
		{
			result += (result.empty() ? ":- " : " :- ");

			for (std::size_t i = 0; i < body.size(); i++)
				result += (i > 0 ? ", " : "") + body[i];
		}

		return result + ".\n";
	}

	std::string program()
	{
		static const std::vector<std::string> names{"p", "q", "r"};

		for (auto count = uniform(random, 1, 3), i = std::size_t{0}; i < count; i++)
			predicates.push_back({names[i], uniform(random, 0, 2)});

		std::string result;

		for (auto count = uniform(random, 1, 5); count > 0; count--)
			result += rule();

		if (chance(random, 0.5))
		{
			std::vector<const Predicate *> shown;

			for (const auto &predicate : predicates)
				if (chance(random, 0.5))
					shown.push_back(&predicate);

			if (shown.empty())
				shown.push_back(&pick(random, predicates));

			for (const auto *predicate : shown)
				result += "#show " + predicate->name + "/" + std::to_string(predicate->arity) + ".\n";
		}

		return result;
	}
};

}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string randomTightProgram(Random &random)
{
	return ProgramGenerator{random, {}}.program();
}

oracle::Domain randomProgramDomain()
{
	return oracle::Domain::make({"a"}, 1, 8);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

struct FormulaGenerator
{
	Random &random;
	std::vector<fol::Variable> scope;

	fol::Term constant()
	{
		switch (uniform(random, 0, 3))
		{
			case 0:
				return fol::SymbolicConstant{"a"};
			default:
				return fol::IntegerConstant{static_cast<std::int64_t>(uniform(random, 0, 2))};
		}
	}

	fol::Term singleTerm()
	{
		if (!scope.empty() && chance(random, 0.65))
			return pick(random, scope);

		return constant();
	}

	fol::Term setTerm()
	{
		switch (uniform(random, 0, 4))
		{
			case 0:
				return singleTerm();
			case 1:
				return fol::SetOperation{BinaryOperator::Interval, singleTerm(), singleTerm()};
			case 2:
				return fol::SetOperation{pick(random, std::vector{BinaryOperator::Plus, BinaryOperator::Minus}),
					singleTerm(), fol::IntegerConstant{static_cast<std::int64_t>(uniform(random, 0, 1))}};
			case 3:
				return fol::SetOperation{BinaryOperator::Interval,
					fol::IntegerConstant{static_cast<std::int64_t>(uniform(random, 0, 2))},
					fol::IntegerConstant{static_cast<std::int64_t>(uniform(random, 0, 2))}};
			default:
				return fol::SetOperation{BinaryOperator::Division, singleTerm(),
					fol::IntegerConstant{static_cast<std::int64_t>(uniform(random, 0, 2))}};
		}
	}

	fol::Formula atom()
	{
		const auto roll = uniform(random, 0, 99);

		if (roll < 35)
		{
			switch (uniform(random, 0, 2))
			{
				case 0:
					return fol::Predicate{"p", {singleTerm()}};
				case 1:
					return fol::Predicate{"q", {singleTerm(), singleTerm()}};
				default:
					return fol::Predicate{"r", {}};
			}
		}

		if (roll < 65)
		{
			static const std::vector<ComparisonOperator> operators{ComparisonOperator::Equal,
				ComparisonOperator::NotEqual, ComparisonOperator::Less, ComparisonOperator::LessEqual,
				ComparisonOperator::Greater, ComparisonOperator::GreaterEqual};

			return fol::Comparison{pick(random, operators), singleTerm(), singleTerm()};
		}

		if (roll < 90)
			return fol::In{singleTerm(), setTerm()};

		return fol::Boolean{chance(random, 0.5)};
	}

	std::vector<fol::Variable> bind()
	{
		std::vector<fol::Variable> variables;

		for (auto count = uniform(random, 1, 2); count > 0; count--)
		{
			variables.push_back(fol::Variable::fresh(chance(random, 0.35) ? fol::Sort::Integer : fol::Sort::General));
			scope.push_back(variables.back());
		}

		return variables;
	}

	void unbind(const std::vector<fol::Variable> &variables)
	{
		scope.resize(scope.size() - variables.size());
	}

	fol::Formula formula(std::size_t depth)
	{
		if (depth == 0)
			return atom();

		const auto roll = uniform(random, 0, 99);

		if (roll < 12)
			return fol::Not{formula(depth - 1)};

		if (roll < 27)
			return fol::And{{formula(depth - 1), formula(depth - 1)}};

		if (roll < 40)
			return fol::Or{{formula(depth - 1), formula(depth - 1)}};

		if (roll < 47)
			return fol::Implies{formula(depth - 1), formula(depth - 1)};

		if (roll < 52)
			return fol::Biconditional{formula(depth - 1), formula(depth - 1)};

		if (roll < 72)
		{
			const auto variables = bind();
			auto argument = formula(depth - 1);
			unbind(variables);

			if (chance(random, 0.5))
				return fol::ForAll{variables, argument};

			return fol::Exists{variables, argument};
		}

		if (roll < 85)
		{
			// exists Z (Z = t and F)
			const auto term = singleTerm();
			const auto variable = fol::Variable::fresh(chance(random, 0.35) ? fol::Sort::Integer : fol::Sort::General);
			scope.push_back(variable);
			auto rest = formula(depth - 1);
			scope.pop_back();

			std::vector<fol::Formula> arguments{fol::Comparison{ComparisonOperator::Equal, variable, term}, rest};

			if (chance(random, 0.5))
				std::swap(arguments[0], arguments[1]);

			return fol::Exists{{variable}, fol::And{std::move(arguments)}};
		}

		if (roll < 92)
			return fol::Not{fol::Not{formula(depth - 1)}};

		return atom();
	}

	fol::Formula literal(std::size_t depth)
	{
		if (chance(random, 0.4))
			return fol::Not{formula(depth)};

		return formula(depth);
	}

	fol::Formula sentence()
	{
		const auto roll = uniform(random, 0, 99);

		if (roll < 25)
		{
			// not exists X (L1 and ... and Lk)
			const auto variables = bind();
			std::vector<fol::Formula> literals;

			for (auto count = uniform(random, 2, 3); count > 0; count--)
				literals.push_back(literal(1));

			unbind(variables);

			return fol::Not{fol::Exists{variables, fol::And{std::move(literals)}}};
		}

		if (roll < 50)
		{
			// forall X (not A or B)
			const auto variables = bind();
			std::vector<fol::Formula> disjuncts{fol::Not{formula(1)}, formula(1)};

			if (chance(random, 0.5))
				std::swap(disjuncts[0], disjuncts[1]);

			unbind(variables);

			return fol::ForAll{variables, fol::Or{std::move(disjuncts)}};
		}

		return formula(uniform(random, 1, 4));
	}
};

}

////////////////////////////////////////////////////////////////////////////////////////////////////

fol::Formula randomFormula(Random &random)
{
	return FormulaGenerator{random, {}}.sentence();
}

oracle::Domain randomFormulaDomain()
{
	return oracle::Domain::make({"a", "b"}, 0, 2);
}

std::vector<PredicateSignature> randomFormulaSignature()
{
	return {{"p", 1}, {"q", 2}, {"r", 0}};
}

oracle::Interpretation randomInterpretation(Random &random, const std::vector<PredicateSignature> &predicates,
	const oracle::Domain &domain)
{
	const auto density = std::uniform_real_distribution<double>(0.1, 0.9)(random);
	oracle::Interpretation result;

	for (const auto &predicate : predicates)
		for (auto &atom : oracle::groundAtoms(predicate, domain))
			if (chance(random, density))
				result.insert(std::move(atom));

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

ast::Term randomGroundTerm(Random &random, std::size_t depth)
{
	if (depth == 0 || chance(random, 0.3))
	{
		if (chance(random, 0.15))
			return ast::Symbol{chance(random, 0.5) ? "a" : "b"};

		return ast::Integer{static_cast<std::int64_t>(uniform(random, 0, 8)) - 4};
	}

	static const std::vector<BinaryOperator> operators{BinaryOperator::Plus, BinaryOperator::Minus,
		BinaryOperator::Multiplication, BinaryOperator::Division, BinaryOperator::Interval};

	const auto binaryOperator = pick(random, operators);

	return ast::BinaryOperation{binaryOperator, randomGroundTerm(random, depth - 1),
		randomGroundTerm(random, depth - 1)};
}

std::set<Value> naiveValues(const ast::Term &term)
{
	if (const auto *integer = term.as<ast::Integer>())
		return {Value::integer(integer->value)};

	if (const auto *symbol = term.as<ast::Symbol>())
		return {Value::symbol(symbol->name)};

	const auto &operation = *term.as<ast::BinaryOperation>();
	const auto left = naiveValues(operation.left);
	const auto right = naiveValues(operation.right);

	std::set<Value> result;

	for (const auto &leftValue : left)
		for (const auto &rightValue : right)
		{
			if (!leftValue.isInteger() || !rightValue.isInteger())
				continue;

			const auto l = leftValue.integer();
			const auto r = rightValue.integer();

			switch (operation.binaryOperator)
			{
				case BinaryOperator::Plus:
					result.insert(Value::integer(l + r));
					break;
				case BinaryOperator::Minus:
					result.insert(Value::integer(l - r));
					break;
				case BinaryOperator::Multiplication:
					result.insert(Value::integer(l * r));
					break;
				case BinaryOperator::Division:
					if (r != 0)
						result.insert(Value::integer(l / r));
					break;
				case BinaryOperator::Interval:
					for (auto k = l; k <= r; k++)
						result.insert(Value::integer(k));
					break;
			}
		}

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

oracle::GroundProgram randomGroundProgram(Random &random, std::size_t atomCount, std::size_t ruleCount)
{
	std::vector<oracle::GroundAtom> atoms;

	for (std::size_t i = 0; i < atomCount; i++)
		atoms.push_back({"x", {Value::integer(static_cast<std::int64_t>(i))}});

	std::set<oracle::GroundRule> rules;

	for (std::size_t i = 0; i < ruleCount; i++)
	{
		oracle::GroundRule rule;
		const auto roll = uniform(random, 0, 99);

		rule.kind = roll < 60
			? oracle::GroundRule::Kind::Basic
			: roll < 80 ? oracle::GroundRule::Kind::Choice : oracle::GroundRule::Kind::Constraint;

		if (rule.kind != oracle::GroundRule::Kind::Constraint)
			rule.head = pick(random, atoms);

		for (const auto &atom : atoms)
		{
			const auto literal = uniform(random, 0, 99);

			if (literal < 15)
				rule.positiveBody.push_back(atom);
			else if (literal < 30)
				rule.negativeBody.push_back(atom);
		}

		rules.insert(std::move(rule));
	}

	return {{rules.begin(), rules.end()}};
}

std::vector<oracle::Interpretation> naiveStableModels(const oracle::GroundProgram &program)
{
	const auto atomSet = program.atoms();
	const std::vector<oracle::GroundAtom> atoms(atomSet.begin(), atomSet.end());

	const auto subset =
		[](const std::vector<oracle::GroundAtom> &atoms, const oracle::Interpretation &interpretation)
		{
			return std::all_of(atoms.begin(), atoms.end(),
				[&](const auto &atom){return interpretation.contains(atom);});
		};

	const auto disjoint =
		[](const std::vector<oracle::GroundAtom> &atoms, const oracle::Interpretation &interpretation)
		{
			return std::none_of(atoms.begin(), atoms.end(),
				[&](const auto &atom){return interpretation.contains(atom);});
		};

	std::vector<oracle::Interpretation> result;

	for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); mask++)
	{
		oracle::Interpretation candidate;

		for (std::size_t i = 0; i < atoms.size(); i++)
			if (mask & (std::uint64_t{1} << i))
				candidate.insert(atoms[i]);

		// Reduct: rules blocked by the candidate disappear, the rest lose their negative literals;
		// a choice rule survives as a plain rule if the candidate contains its head
		std::vector<const oracle::GroundRule *> reduct;

		for (const auto &rule : program.rules)
		{
			if (!disjoint(rule.negativeBody, candidate))
				continue;

			if (rule.kind == oracle::GroundRule::Kind::Choice && !candidate.contains(*rule.head))
				continue;

			reduct.push_back(&rule);
		}

		oracle::Interpretation leastModel;
		bool isInconsistent = false;

		for (bool changed = true; changed && !isInconsistent;)
		{
			changed = false;

			for (const auto *rule : reduct)
			{
				if (!subset(rule->positiveBody, leastModel))
					continue;

				if (!rule->head)
				{
					isInconsistent = true;
					break;
				}

				if (leastModel.insert(*rule->head).second)
					changed = true;
			}
		}

		if (!isInconsistent && leastModel == candidate)
			result.push_back(std::move(candidate));
	}

	std::sort(result.begin(), result.end());

	return result;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}
