#include <anthem/Format.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Format
//
////////////////////////////////////////////////////////////////////////////////////////////////////

std::string FormulaPrinter::print(const fol::Formula &formula)
{
	std::string output;
	printFormula(output, formula);
	return output;
}

std::string FormulaPrinter::print(const fol::Term &term)
{
	std::string output;
	printTerm(output, term, false);
	return output;
}

std::string FormulaPrinter::print(const fol::IntegerAnnotation &annotation)
{
	return fol::format(annotation);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string FormulaPrinter::nextName(const fol::Variable &variable)
{
	if (variable.sort == fol::Sort::Integer)
		return "N" + std::to_string(++m_integerCounter);

	if (variable.role == fol::VariableRole::Head)
		return "V" + std::to_string(++m_headCounter);

	return "U" + std::to_string(++m_otherCounter);
}

const std::string &FormulaPrinter::name(const fol::Variable &variable)
{
	auto &names = m_names[variable.id];

	// Free variables keep the name of their first occurrence
	if (names.empty())
		names.push_back(nextName(variable));

	return names.back();
}

////////////////////////////////////////////////////////////////////////////////////////////////////

void FormulaPrinter::printTerm(std::string &output, const fol::Term &term, bool isMembershipSet)
{
	std::visit(
		[&](const auto &term)
		{
			using T = std::decay_t<decltype(term)>;

			if constexpr (std::is_same_v<T, fol::Variable>)
				output += name(term);
			else if constexpr (std::is_same_v<T, fol::SymbolicConstant>)
				output += term.name;
			else if constexpr (std::is_same_v<T, fol::IntegerConstant>)
				output += std::to_string(term.value);
			else
			{
				// Intervals are only left unparenthesized directly to the right of “in”
				if (term.binaryOperator == BinaryOperator::Interval && isMembershipSet)
				{
					printTerm(output, term.left, false);
					output += "..";
					printTerm(output, term.right, false);
					return;
				}

				output += "(";
				printTerm(output, term.left, false);

				if (term.binaryOperator == BinaryOperator::Interval)
					output += "..";
				else
				{
					output += " ";
					output += toString(term.binaryOperator);
					output += " ";
				}

				printTerm(output, term.right, false);
				output += ")";
			}
		}, term.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

void FormulaPrinter::printConnective(std::string &output, const std::vector<fol::Formula> &arguments,
	const char *connective)
{
	output += "(";

	for (std::size_t i = 0; i < arguments.size(); i++)
	{
		if (i > 0)
		{
			output += " ";
			output += connective;
			output += " ";
		}

		printFormula(output, arguments[i]);
	}

	output += ")";
}

////////////////////////////////////////////////////////////////////////////////////////////////////

void FormulaPrinter::printFormula(std::string &output, const fol::Formula &formula)
{
	std::visit(
		[&](const auto &formula)
		{
			using T = std::decay_t<decltype(formula)>;

			if constexpr (std::is_same_v<T, fol::Boolean>)
				output += formula.value ? "#true" : "#false";
			else if constexpr (std::is_same_v<T, fol::Predicate>)
			{
				output += formula.name;

				if (formula.arguments.empty())
					return;

				output += "(";

				for (std::size_t i = 0; i < formula.arguments.size(); i++)
				{
					if (i > 0)
						output += ", ";

					printTerm(output, formula.arguments[i], false);
				}

				output += ")";
			}
			else if constexpr (std::is_same_v<T, fol::Comparison>)
			{
				printTerm(output, formula.left, false);
				output += " ";
				output += toString(formula.comparisonOperator);
				output += " ";
				printTerm(output, formula.right, false);
			}
			else if constexpr (std::is_same_v<T, fol::In>)
			{
				printTerm(output, formula.element, false);
				output += " in ";
				printTerm(output, formula.set, true);
			}
			else if constexpr (std::is_same_v<T, fol::Not>)
			{
				output += "not ";
				printFormula(output, formula.argument);
			}
			else if constexpr (std::is_same_v<T, fol::And>)
				printConnective(output, formula.arguments, "and");
			else if constexpr (std::is_same_v<T, fol::Or>)
				printConnective(output, formula.arguments, "or");
			else if constexpr (std::is_same_v<T, fol::Implies>)
				printConnective(output, {formula.antecedent, formula.consequent}, "->");
			else if constexpr (std::is_same_v<T, fol::Biconditional>)
				printConnective(output, {formula.left, formula.right}, "<->");
			else
			{
				output += std::is_same_v<T, fol::ForAll> ? "forall " : "exists ";

				for (std::size_t i = 0; i < formula.variables.size(); i++)
				{
					if (i > 0)
						output += ", ";

					const auto &variable = formula.variables[i];
					m_names[variable.id].push_back(nextName(variable));
					output += m_names[variable.id].back();
				}

				output += " ";
				printFormula(output, formula.argument);

				for (const auto &variable : formula.variables)
					m_names[variable.id].pop_back();
			}
		}, formula.variant());
}

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string formatFormula(const fol::Formula &formula)
{
	FormulaPrinter printer;
	return printer.print(formula);
}

std::string formatTerm(const fol::Term &term)
{
	FormulaPrinter printer;
	return printer.print(term);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
