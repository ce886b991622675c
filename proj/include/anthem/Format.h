#ifndef __ANTHEM__FORMAT_H
#define __ANTHEM__FORMAT_H

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <anthem/Formula.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Format
//
// Variables get their names at print time: integer variables are named N1, N2, ..., head
// variables of completed definitions V1, V2, ..., and all others U1, U2, .... A printer keeps its
// counters across calls, so that numbering continues over the formulas of one output.
//
////////////////////////////////////////////////////////////////////////////////////////////////////

class FormulaPrinter
{
	public:
		std::string print(const fol::Formula &formula);
		std::string print(const fol::Term &term);
		std::string print(const fol::IntegerAnnotation &annotation);

	private:
		void printFormula(std::string &output, const fol::Formula &formula);
		void printTerm(std::string &output, const fol::Term &term, bool isMembershipSet);
		void printConnective(std::string &output, const std::vector<fol::Formula> &arguments,
			const char *connective);

		std::string nextName(const fol::Variable &variable);
		const std::string &name(const fol::Variable &variable);

		std::map<std::uint64_t, std::vector<std::string>> m_names;
		std::size_t m_headCounter = 0;
		std::size_t m_integerCounter = 0;
		std::size_t m_otherCounter = 0;
};

////////////////////////////////////////////////////////////////////////////////////////////////////

std::string formatFormula(const fol::Formula &formula);
std::string formatTerm(const fol::Term &term);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
