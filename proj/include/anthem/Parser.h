#ifndef __ANTHEM__PARSER_H
#define __ANTHEM__PARSER_H

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <anthem/Program.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Parser
//
////////////////////////////////////////////////////////////////////////////////////////////////////

// Parses program text in the supported gringo fragment.
//
// Throws ParseError on malformed input, UnsupportedConstructError for aggregates, conditional
// literals, choice bounds, disjunction, classical negation and similar, SafetyError for unsafe
// variables, and LogicError when an external predicate occurs in a rule head.
ast::Program parseProgram(std::string_view source, const std::string &fileName = "<input>");

// Parses several sources and merges them in order, as if they were one file
ast::Program parseProgram(const std::vector<std::pair<std::string, std::string>> &namedSources);

void checkSafety(const ast::Rule &rule);
void checkExternals(const ast::Program &program);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
