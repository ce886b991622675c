#ifndef __ANTHEM__ORACLE__INTERPRETATION_H
#define __ANTHEM__ORACLE__INTERPRETATION_H

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <anthem/Common.h>
#include <anthem/Formula.h>
#include <anthem/Program.h>
#include <anthem/Values.h>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Interpretation
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct GroundAtom
{
	std::string predicate;
	std::vector<Value> arguments;

	PredicateSignature signature() const
	{
		return {predicate, arguments.size()};
	}

	auto operator<=>(const GroundAtom &other) const = default;
	bool operator==(const GroundAtom &other) const = default;
};

std::string toString(const GroundAtom &atom);

using Interpretation = std::set<GroundAtom>;

std::string toString(const Interpretation &interpretation);

// Atoms whose predicate belongs to the given set
Interpretation restrict(const Interpretation &interpretation, const std::set<PredicateSignature> &predicates);

////////////////////////////////////////////////////////////////////////////////////////////////////

// The finite universe of a bounded check. General variables range over all values, integer
// variables over the integer values.
struct Domain
{
	std::set<Value> values;

	static Domain make(const std::vector<std::string> &symbols, std::int64_t lower, std::int64_t upper);

	std::vector<Value> generalValues() const;
	std::vector<Value> integerValues() const;
	bool contains(const Value &value) const;
};

std::string toString(const Domain &domain);

// All tuples of the given length over the values
std::vector<std::vector<Value>> tuples(const std::vector<Value> &values, std::size_t arity);

// All atoms of the predicate with arguments from the domain
std::vector<GroundAtom> groundAtoms(const PredicateSignature &predicate, const Domain &domain);

////////////////////////////////////////////////////////////////////////////////////////////////////

// Placeholder constants such as n in “1..n” get integer values for a bounded check
using Constants = std::map<std::string, std::int64_t>;

ast::Program substituteConstants(const ast::Program &program, const Constants &constants);
fol::Formula substituteConstants(const fol::Formula &formula, const Constants &constants);

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
