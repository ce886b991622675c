#include <anthem/Cli.h>

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include <anthem/Parser.h>
#include <anthem/Pipeline.h>
#include <anthem/oracle/Correspondence.h>
#include <anthem/oracle/StableModels.h>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Cli
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

struct TranslateArguments
{
	std::vector<std::string> files;
	bool noComplete = false;
	bool noSimplify = false;
	bool noDetectIntegers = false;
};

struct VerifyArguments
{
	std::vector<std::string> files;
	std::string domain;
	std::string integerWindow;
	std::vector<std::string> externals;
	std::vector<std::string> constants;
	bool allExternalExtents = false;
};

ast::Program readProgram(const std::vector<std::string> &files, std::istream &input)
{
	std::vector<std::pair<std::string, std::string>> sources;

	if (files.empty())
	{
		std::stringstream buffer;
		buffer << input.rdbuf();
		sources.emplace_back("<stdin>", buffer.str());
	}

	for (const auto &file : files)
	{
		std::ifstream stream(file);

		if (!stream)
			throw Error("cannot read file “" + file + "”");

		std::stringstream buffer;
		buffer << stream.rdbuf();
		sources.emplace_back(file, buffer.str());
	}

	return parseProgram(sources);
}

////////////////////////////////////////////////////////////////////////////////////////////////////

Value parseValue(const std::string &text)
{
	static const std::regex integer("-?[0-9]+");
	static const std::regex symbol("[a-z][A-Za-z0-9_']*");

	if (std::regex_match(text, integer))
		return Value::integer(std::stoll(text));

	if (std::regex_match(text, symbol))
		return Value::symbol(text);

	throw Error("invalid value “" + text + "”");
}

// Splits at commas outside of parentheses
std::vector<std::string> splitTopLevel(const std::string &text)
{
	std::vector<std::string> result;
	std::string current;
	int depth = 0;

	for (const auto c : text)
	{
		if (c == '(')
			depth++;
		else if (c == ')')
			depth--;

		if (c == ',' && depth == 0)
		{
			result.push_back(current);
			current.clear();
		}
		else if (c != ' ')
			current.push_back(c);
	}

	if (!current.empty())
		result.push_back(current);

	return result;
}

// “p=a,b” for unary predicates, “edge=(1,2),(2,1)” for others
std::vector<oracle::GroundAtom> parseExternal(const std::string &text, const ast::Program &program)
{
	const auto separator = text.find('=');

	if (separator == std::string::npos)
		throw Error("invalid external input “" + text + "”, expected “name=tuples”");

	const auto name = text.substr(0, separator);

	std::optional<PredicateSignature> signature;

	for (const auto &external : program.externals)
		if (external.name == name)
		{
			if (signature)
				throw Error("external predicate name “" + name + "” is ambiguous");

			signature = external;
		}

	if (!signature)
		throw Error("“" + name + "” is not declared external");

	std::vector<oracle::GroundAtom> result;

	for (auto tuple : splitTopLevel(text.substr(separator + 1)))
	{
		if (tuple.size() >= 2 && tuple.front() == '(' && tuple.back() == ')')
			tuple = tuple.substr(1, tuple.size() - 2);

		oracle::GroundAtom atom{name, {}};

		for (const auto &value : splitTopLevel(tuple))
			atom.arguments.push_back(parseValue(value));

		if (atom.arguments.size() != signature->arity)
			throw Error("tuple “" + tuple + "” does not match " + toString(*signature));

		result.push_back(std::move(atom));
	}

	return result;
}

std::pair<std::int64_t, std::int64_t> parseWindow(const std::string &text)
{
	static const std::regex window("(-?[0-9]+)\\.\\.(-?[0-9]+)");
	std::smatch match;

	if (!std::regex_match(text, match, window))
		throw Error("invalid integer window “" + text + "”, expected “lo..hi”");

	return {std::stoll(match[1]), std::stoll(match[2])};
}

////////////////////////////////////////////////////////////////////////////////////////////////////

int runTranslate(const TranslateArguments &arguments, std::istream &input, std::ostream &output,
	std::ostream &diagnostics)
{
	const auto program = readProgram(arguments.files, input);

	TranslationOptions options;
	options.complete = !arguments.noComplete;
	options.simplify = !arguments.noSimplify;
	options.detectIntegers = !arguments.noDetectIntegers;

	const auto result = translate(program, options);

	for (const auto &warning : result.warnings)
		diagnostics << "warning: " << warning << "\n";

	output << result.text();

	return 0;
}

int runVerify(const VerifyArguments &arguments, std::istream &input, std::ostream &output)
{
	const auto program = readProgram(arguments.files, input);

	oracle::Constants constants;

	for (const auto &constant : arguments.constants)
	{
		static const std::regex definition("([a-z][A-Za-z0-9_']*)=(-?[0-9]+)");
		std::smatch match;

		if (!std::regex_match(constant, match, definition))
			throw Error("invalid constant “" + constant + "”, expected “name=integer”");

		constants[match[1]] = std::stoll(match[2]);
	}

	oracle::Interpretation externalInput;

	for (const auto &external : arguments.externals)
		for (auto &atom : parseExternal(external, program))
			externalInput.insert(std::move(atom));

	oracle::Domain domain;

	if (arguments.domain.empty() && arguments.integerWindow.empty())
		domain = oracle::defaultDomain(oracle::substituteConstants(program, constants), externalInput);
	else
	{
		for (const auto &value : splitTopLevel(arguments.domain))
			domain.values.insert(parseValue(value));

		if (!arguments.integerWindow.empty())
		{
			const auto [lower, upper] = parseWindow(arguments.integerWindow);

			for (auto value = lower; value <= upper; value++)
				domain.values.insert(Value::integer(value));
		}
	}

	const auto translation = translate(program);

	const auto inputs = arguments.allExternalExtents
		? oracle::enumerateExternalInputs(program, domain)
		: std::vector<oracle::Interpretation>{externalInput};

	output << "domain: " << oracle::toString(domain) << "\n";

	std::size_t failures = 0;
	bool isTight = true;

	for (const auto &externalInput : inputs)
	{
		const auto report = oracle::checkCorrespondence(program, translation.formulas, translation.annotations,
			domain, externalInput, constants);

		if (!program.externals.empty())
			output << "external input: " << oracle::toString(externalInput) << "\n";

		output << report.text();

		if (report.verdict == oracle::CorrespondenceReport::Verdict::NotTight)
		{
			isTight = false;
			break;
		}

		if (!report.holds())
			failures++;
	}

	if (!isTight)
	{
		output << "verdict: not tight\n";
		return 2;
	}

	if (failures > 0)
	{
		output << "verdict: different (" << failures << " of " << inputs.size() << " external inputs)\n";
		return 2;
	}

	output << "verdict: equivalent\n";

	return 0;
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

int run(const std::vector<std::string> &arguments, std::istream &input, std::ostream &output,
	std::ostream &diagnostics)
{
	CLI::App app{"Translates logic programs into first-order theories"};
	app.name("anthem");
	app.set_version_flag("--version", Version);
	app.require_subcommand(1);

	TranslateArguments translateArguments;
	auto *translateCommand = app.add_subcommand("translate", "Print the completed, simplified theory of a program");
	translateCommand->add_option("files", translateArguments.files, "Input files (standard input if omitted)");
	translateCommand->add_flag("--no-complete", translateArguments.noComplete,
		"Print one formula per rule instead of the completion");
	translateCommand->add_flag("--no-simplify", translateArguments.noSimplify, "Skip simplification");
	translateCommand->add_flag("--no-detect-integers", translateArguments.noDetectIntegers,
		"Keep all variables general");

	VerifyArguments verifyArguments;
	auto *verifyCommand = app.add_subcommand("verify",
		"Compare stable models and models of the translation within a finite domain");
	verifyCommand->add_option("files", verifyArguments.files, "Input files (standard input if omitted)");
	verifyCommand->add_option("--domain", verifyArguments.domain, "Comma-separated domain values");
	verifyCommand->add_option("--int-window", verifyArguments.integerWindow, "Integers lo..hi added to the domain");
	verifyCommand->add_option("--external", verifyArguments.externals,
		"Extent of an external predicate, such as p=a,b or edge=(1,2),(2,1)");
	verifyCommand->add_option("--const", verifyArguments.constants, "Value of a placeholder constant, such as n=10");
	verifyCommand->add_flag("--all-external-extents", verifyArguments.allExternalExtents,
		"Check every extent of the external predicates over the domain");

	try
	{
		std::vector<std::string> reversed(arguments.rbegin(), arguments.rend());
		app.parse(reversed);
	}
	catch (const CLI::CallForHelp &)
	{
		output << (app.got_subcommand(translateCommand)
			? translateCommand->help()
			: app.got_subcommand(verifyCommand) ? verifyCommand->help() : app.help());
		return 0;
	}
	catch (const CLI::CallForVersion &)
	{
		output << "anthem " << Version << "\n";
		return 0;
	}
	catch (const CLI::ParseError &error)
	{
		diagnostics << "error: " << error.what() << "\n";
		return 1;
	}

	try
	{
		if (app.got_subcommand(translateCommand))
			return runTranslate(translateArguments, input, output, diagnostics);

		return runVerify(verifyArguments, input, output);
	}
	catch (const std::exception &error)
	{
		diagnostics << "error: " << error.what() << "\n";
		return 1;
	}
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
