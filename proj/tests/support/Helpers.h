#ifndef __ANTHEM__TESTS__HELPERS_H
#define __ANTHEM__TESTS__HELPERS_H

#include <fstream>
#include <sstream>
#include <string>

#include <anthem/Format.h>
#include <anthem/Parser.h>
#include <anthem/Pipeline.h>

namespace anthem
{
namespace test
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Helpers
//
////////////////////////////////////////////////////////////////////////////////////////////////////

inline std::string translateText(const std::string &source, const TranslationOptions &options = {})
{
	return translate(parseProgram(source), options).text();
}

// Collapses runs of whitespace into single spaces and trims the ends
inline std::string normalizeWhitespace(const std::string &text)
{
	std::string result;

	for (const auto c : text)
	{
		if (std::isspace(static_cast<unsigned char>(c)))
		{
			if (!result.empty() && result.back() != ' ')
				result.push_back(' ');
		}
		else
			result.push_back(c);
	}

	if (!result.empty() && result.back() == ' ')
		result.pop_back();

	return result;
}

inline std::string readFile(const std::string &path)
{
	std::ifstream stream(path);

	if (!stream)
		throw std::runtime_error("cannot read “" + path + "”");

	std::stringstream buffer;
	buffer << stream.rdbuf();

	return buffer.str();
}

inline std::string corpusPath(const std::string &name)
{
	return std::string(ANTHEM_CORPUS_DIRECTORY) + "/" + name;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}

#endif
