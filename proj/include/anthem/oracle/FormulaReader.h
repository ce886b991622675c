#ifndef __ANTHEM__ORACLE__FORMULA_READER_H
#define __ANTHEM__ORACLE__FORMULA_READER_H

#include <string_view>
#include <vector>

#include <anthem/Formula.h>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// FormulaReader
//
// Reads formulas and integer annotations in the printed syntax back into formula trees, so that
// printed output can be checked semantically. Variables starting with N are integer variables.
// Arithmetic over integer-valued operands that mentions an integer variable is single-valued, all
// other operations are set-valued.
//
////////////////////////////////////////////////////////////////////////////////////////////////////

struct ReadResult
{
	std::vector<fol::Formula> formulas;
	std::vector<fol::IntegerAnnotation> annotations;
};

// Formulas follow each other without separators; throws ParseError
ReadResult readFormulas(std::string_view text);

fol::Formula readFormula(std::string_view text);

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
