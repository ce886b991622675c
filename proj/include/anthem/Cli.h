#ifndef __ANTHEM__CLI_H
#define __ANTHEM__CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Cli
//
// anthem translate [--no-complete] [--no-simplify] [--no-detect-integers] [files...]
// anthem verify files... [--domain csv] [--int-window lo..hi] [--external p=tuples]...
//     [--const name=value]... [--all-external-extents]
//
// Exit codes: 0 on success, 1 on input errors, 2 if verification fails or the program is not tight
//
////////////////////////////////////////////////////////////////////////////////////////////////////

constexpr const char *Version = "0.1.0";

// Arguments without the program name; translate reads the input stream when no files are given
int run(const std::vector<std::string> &arguments, std::istream &input, std::ostream &output,
	std::ostream &diagnostics);

////////////////////////////////////////////////////////////////////////////////////////////////////

}

#endif
