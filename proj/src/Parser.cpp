#include <anthem/Parser.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace anthem
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// Parser
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

enum class TokenType
{
	Identifier,
	Variable,
	Anonymous,
	Number,
	String,
	Directive,
	Punctuation,
	End,
};

struct Token
{
	TokenType type;
	std::string text;
	Location location;

	bool is(const char *punctuation) const
	{
		return type == TokenType::Punctuation && text == punctuation;
	}
};

////////////////////////////////////////////////////////////////////////////////////////////////////

class Lexer
{
	public:
		Lexer(std::string_view source, std::string fileName)
		:	m_source{source},
			m_fileName{std::move(fileName)}
		{
		}

		std::vector<Token> tokenize()
		{
			std::vector<Token> tokens;

			while (true)
			{
				skipWhitespaceAndComments();

				auto location = currentLocation();

				if (m_position >= m_source.size())
				{
					tokens.push_back({TokenType::End, "", std::move(location)});
					return tokens;
				}

				tokens.push_back(readToken(std::move(location)));
			}
		}

	private:
		Location currentLocation() const
		{
			return {m_fileName, m_line, m_column};
		}

		char peek(std::size_t offset = 0) const
		{
			return m_position + offset < m_source.size() ? m_source[m_position + offset] : '\0';
		}

		void advance()
		{
			if (m_source[m_position] == '\n')
			{
				m_line++;
				m_column = 1;
			}
			else
				m_column++;

			m_position++;
		}

		void skipWhitespaceAndComments()
		{
			while (m_position < m_source.size())
			{
				const auto character = peek();

				if (std::isspace(static_cast<unsigned char>(character)))
					advance();
				else if (character == '%' && peek(1) == '*')
				{
					const auto location = currentLocation();
					advance();
					advance();

					while (!(peek() == '*' && peek(1) == '%'))
					{
						if (m_position >= m_source.size())
							throw ParseError(location, "unterminated block comment");

						advance();
					}

					advance();
					advance();
				}
				else if (character == '%')
				{
					while (m_position < m_source.size() && peek() != '\n')
						advance();
				}
				else
					return;
			}
		}

		static bool isIdentifierCharacter(char character)
		{
			return std::isalnum(static_cast<unsigned char>(character)) || character == '_'
				|| character == '\'';
		}

		Token readToken(Location location)
		{
			const auto character = peek();
			const auto start = m_position;

			if (std::isalpha(static_cast<unsigned char>(character)) || character == '_')
			{
				while (isIdentifierCharacter(peek()))
					advance();

				std::string text{m_source.substr(start, m_position - start)};
				const auto firstLetter = text.find_first_not_of('_');

				if (firstLetter == std::string::npos)
				{
					if (text.size() > 1)
						throw ParseError(location, "invalid identifier “" + text + "”");

					return {TokenType::Anonymous, text, std::move(location)};
				}

				const auto isVariable = std::isupper(static_cast<unsigned char>(text[firstLetter]));

				return {isVariable ? TokenType::Variable : TokenType::Identifier, text, std::move(location)};
			}

			if (std::isdigit(static_cast<unsigned char>(character)))
			{
				while (std::isdigit(static_cast<unsigned char>(peek())))
					advance();

				return {TokenType::Number, std::string{m_source.substr(start, m_position - start)},
					std::move(location)};
			}

			if (character == '"')
			{
				advance();

				while (peek() != '"')
				{
					if (m_position >= m_source.size())
						throw ParseError(location, "unterminated string");

					if (peek() == '\\')
						advance();

					advance();
				}

				advance();

				return {TokenType::String, std::string{m_source.substr(start, m_position - start)},
					std::move(location)};
			}

			if (character == '#')
			{
				advance();

				while (isIdentifierCharacter(peek()))
					advance();

				return {TokenType::Directive, std::string{m_source.substr(start, m_position - start)},
					std::move(location)};
			}

			static constexpr std::string_view punctuation[] =
				{":-", ":~", "..", "!=", "<>", "<=", ">=", "==", "**",
				".", ",", ";", ":", "(", ")", "{", "}", "[", "]", "|", "=", "<", ">", "+", "-", "*",
				"/", "\\", "@", "&", "~", "^", "?"};

			for (const auto &candidate : punctuation)
				if (m_source.substr(m_position, candidate.size()) == candidate)
				{
					for (std::size_t i = 0; i < candidate.size(); i++)
						advance();

					return {TokenType::Punctuation, std::string{candidate}, std::move(location)};
				}

			throw ParseError(location, std::string("unexpected character “") + character + "”");
		}

		std::string_view m_source;
		std::string m_fileName;
		std::size_t m_position = 0;
		std::size_t m_line = 1;
		std::size_t m_column = 1;
};

////////////////////////////////////////////////////////////////////////////////////////////////////

std::optional<ComparisonOperator> comparisonOperator(const Token &token)
{
	if (token.type != TokenType::Punctuation)
		return std::nullopt;

	if (token.text == "=" || token.text == "==")
		return ComparisonOperator::Equal;
	if (token.text == "!=" || token.text == "<>")
		return ComparisonOperator::NotEqual;
	if (token.text == "<")
		return ComparisonOperator::Less;
	if (token.text == "<=")
		return ComparisonOperator::LessEqual;
	if (token.text == ">")
		return ComparisonOperator::Greater;
	if (token.text == ">=")
		return ComparisonOperator::GreaterEqual;

	return std::nullopt;
}

bool isArithmeticOperator(const Token &token)
{
	return token.is("+") || token.is("-") || token.is("*") || token.is("/") || token.is("..")
		|| token.is("\\") || token.is("**");
}

bool isAggregateDirective(const std::string &text)
{
	return text == "#count" || text == "#sum" || text == "#sum+" || text == "#min" || text == "#max";
}

////////////////////////////////////////////////////////////////////////////////////////////////////

class Parser
{
	public:
		Parser(std::vector<Token> tokens)
		:	m_tokens{std::move(tokens)}
		{
		}

		ast::Program parse()
		{
			ast::Program program;

			while (current().type != TokenType::End)
				parseStatement(program);

			return program;
		}

	private:
		const Token &current() const
		{
			return m_tokens[m_position];
		}

		const Token &lookahead(std::size_t offset = 1) const
		{
			return m_tokens[std::min(m_position + offset, m_tokens.size() - 1)];
		}

		const Token &consume()
		{
			const auto &token = m_tokens[m_position];

			if (m_position + 1 < m_tokens.size())
				m_position++;

			return token;
		}

		[[noreturn]] void fail(const std::string &message) const
		{
			const auto &token = current();
			const auto found = token.type == TokenType::End ? "end of input" : "“" + token.text + "”";

			throw ParseError(token.location, message + ", found " + found);
		}

		[[noreturn]] void unsupported(const std::string &construct) const
		{
			throw UnsupportedConstructError(current().location, construct);
		}

		void expect(const char *punctuation)
		{
			if (!current().is(punctuation))
				fail(std::string("expected “") + punctuation + "”");

			consume();
		}

		////////////////////////////////////////////////////////////////////////////////////////////

		void parseStatement(ast::Program &program)
		{
			const auto &token = current();

			if (token.type == TokenType::Directive)
			{
				if (token.text == "#show")
					return parseShow(program);

				if (token.text == "#external")
					return parseExternal(program);

				if (isAggregateDirective(token.text))
					unsupported("aggregate");

				if (token.text == "#true" || token.text == "#false")
					unsupported("Boolean constant “" + token.text + "”");

				unsupported("directive “" + token.text + "”");
			}

			if (token.is(":~"))
				unsupported("weak constraint");

			ast::Rule rule;
			rule.location = token.location;
			rule.head = ast::NoHead{};

			if (!token.is(":-"))
				rule.head = parseHead();

			if (current().is(":-"))
			{
				consume();
				rule.body = parseBody();
			}
			else if (std::holds_alternative<ast::NoHead>(rule.head))
				fail("expected rule head or “:-”");

			if (current().is("@"))
				unsupported("weak constraint weight");

			expect(".");

			checkSafety(rule);

			program.rules.push_back(std::move(rule));
		}

		void parseShow(ast::Program &program)
		{
			consume();
			program.hasShowDirective = true;

			if (current().is("."))
			{
				consume();
				return;
			}

			if (current().is("-"))
				unsupported("classical negation");

			if (current().type != TokenType::Identifier || !lookahead().is("/"))
				unsupported("#show directive with terms");

			auto name = consume().text;
			consume();

			if (current().type != TokenType::Number)
				fail("expected arity");

			const auto arity = parseNumber(consume());

			if (current().is(":"))
				unsupported("#show directive with terms");

			expect(".");

			program.shows.insert({std::move(name), static_cast<std::size_t>(arity)});
		}

		void parseExternal(ast::Program &program)
		{
			consume();

			if (current().is("-"))
				unsupported("classical negation");

			const auto atom = parseAtom();

			if (current().is(":"))
				unsupported("conditional #external directive");

			if (current().is("["))
				unsupported("#external directive with truth value");

			expect(".");

			// A single integer argument states the arity, as in “#external edge(2).”; otherwise the
			// number of arguments does
			auto signature = atom.signature();

			if (atom.arguments.size() == 1)
				if (const auto *integer = atom.arguments.front().as<ast::Integer>(); integer && integer->value >= 0)
					signature.arity = static_cast<std::size_t>(integer->value);

			program.externals.insert(std::move(signature));
		}

		////////////////////////////////////////////////////////////////////////////////////////////

		ast::Head parseHead()
		{
			const auto &token = current();

			if (token.is("-"))
				unsupported("classical negation");

			if (token.type == TokenType::Directive)
			{
				if (isAggregateDirective(token.text))
					unsupported("aggregate");

				unsupported("“" + token.text + "” in rule head");
			}

			if (token.type == TokenType::Identifier && token.text == "not")
				unsupported("negated rule head");

			// A term in front of a brace is a lower bound
			if (token.type == TokenType::Number || token.type == TokenType::Variable
				|| token.is("("))
			{
				unsupported("cardinality bounds on choice rule");
			}

			if (token.is("{"))
				return parseChoiceHead();

			auto atom = parseAtom();

			if (current().is(";") || current().is("|"))
				unsupported("disjunctive rule head");

			if (current().is(":"))
				unsupported("conditional literal");

			return ast::BasicHead{std::move(atom)};
		}

		ast::Head parseChoiceHead()
		{
			consume();

			if (current().is("}"))
				unsupported("empty choice rule");

			if (current().is("-"))
				unsupported("classical negation");

			auto atom = parseAtom();

			if (current().is(";"))
				unsupported("choice rule with more than one element");

			if (current().is(":"))
				unsupported("conditional literal");

			expect("}");

			if (!current().is(":-") && !current().is("."))
				unsupported("cardinality bounds on choice rule");

			return ast::ChoiceHead{std::move(atom)};
		}

		////////////////////////////////////////////////////////////////////////////////////////////

		std::vector<ast::BodyLiteral> parseBody()
		{
			std::vector<ast::BodyLiteral> body;

			while (true)
			{
				body.push_back(parseLiteral());

				if (current().is(":"))
					unsupported("conditional literal");

				if (current().is(";"))
					unsupported("disjunctive rule body");

				if (!current().is(","))
					break;

				consume();
			}

			return body;
		}

		ast::BodyLiteral parseLiteral()
		{
			const auto &token = current();

			if (token.type == TokenType::Identifier && token.text == "not")
			{
				consume();

				if (current().type == TokenType::Identifier && current().text == "not")
					unsupported("double negation (“not not”)");

				if (current().is("-"))
					unsupported("classical negation");

				if (current().type != TokenType::Identifier)
				{
					if (current().type == TokenType::Directive && isAggregateDirective(current().text))
						unsupported("aggregate");

					if (current().type == TokenType::Directive)
						unsupported("Boolean constant “" + current().text + "”");

					unsupported("negated comparison");
				}

				auto atom = parseAtom();

				if (comparisonOperator(current()) || isArithmeticOperator(current()))
					unsupported("negated comparison");

				return ast::NegativeLiteral{std::move(atom)};
			}

			if (token.is("-") && lookahead().type == TokenType::Identifier)
				unsupported("classical negation");

			if (token.is("{"))
				unsupported("aggregate");

			if (token.type == TokenType::Directive)
			{
				if (isAggregateDirective(token.text))
					unsupported("aggregate");

				unsupported("Boolean constant “" + token.text + "”");
			}

			if (token.type == TokenType::Identifier)
			{
				const auto &next = lookahead();

				if (next.is("("))
				{
					auto atom = parseAtom();

					if (comparisonOperator(current()) || isArithmeticOperator(current()))
						unsupported("function symbol");

					return ast::PositiveLiteral{std::move(atom)};
				}

				if (!comparisonOperator(next) && !isArithmeticOperator(next))
					return ast::PositiveLiteral{parseAtom()};
			}

			auto left = parseTerm();

			if (current().type == TokenType::Directive && isAggregateDirective(current().text))
				unsupported("aggregate");

			const auto comparison = comparisonOperator(current());

			if (!comparison)
				fail("expected comparison operator");

			consume();

			if (current().type == TokenType::Directive && isAggregateDirective(current().text))
				unsupported("aggregate");

			auto right = parseTerm();

			if (comparisonOperator(current()))
				unsupported("chained comparison");

			return ast::Comparison{*comparison, std::move(left), std::move(right)};
		}

		////////////////////////////////////////////////////////////////////////////////////////////

		ast::Atom parseAtom()
		{
			if (current().type != TokenType::Identifier)
				fail("expected predicate name");

			ast::Atom atom{consume().text, {}};

			if (!current().is("("))
				return atom;

			consume();

			if (current().is(")"))
			{
				consume();
				return atom;
			}

			while (true)
			{
				atom.arguments.push_back(parseTerm());

				if (current().is(";"))
					unsupported("pool");

				if (current().is(")"))
					break;

				expect(",");
			}

			consume();

			return atom;
		}

		////////////////////////////////////////////////////////////////////////////////////////////

		ast::Term parseTerm()
		{
			auto left = parseAdditive();

			if (!current().is(".."))
				return left;

			consume();

			auto right = parseAdditive();

			if (current().is(".."))
				fail("unexpected “..”");

			return ast::BinaryOperation{BinaryOperator::Interval, std::move(left), std::move(right)};
		}

		ast::Term parseAdditive()
		{
			auto term = parseMultiplicative();

			while (current().is("+") || current().is("-"))
			{
				const auto binaryOperator = current().is("+") ? BinaryOperator::Plus : BinaryOperator::Minus;
				consume();

				term = ast::BinaryOperation{binaryOperator, std::move(term), parseMultiplicative()};
			}

			return term;
		}

		ast::Term parseMultiplicative()
		{
			auto term = parsePrimary();

			while (true)
			{
				if (current().is("\\"))
					unsupported("modulo");

				if (current().is("**"))
					unsupported("exponentiation");

				if (!current().is("*") && !current().is("/"))
					return term;

				const auto binaryOperator = current().is("*")
					? BinaryOperator::Multiplication
					: BinaryOperator::Division;
				consume();

				term = ast::BinaryOperation{binaryOperator, std::move(term), parsePrimary()};
			}
		}

		ast::Term parsePrimary()
		{
			const auto &token = current();

			switch (token.type)
			{
				case TokenType::Number:
					return ast::Integer{parseNumber(consume())};
				case TokenType::Variable:
					return ast::Variable{consume().text};
				case TokenType::Anonymous:
					consume();
					return ast::Anonymous{m_anonymousCount++};
				case TokenType::Identifier:
					if (lookahead().is("("))
						unsupported("function symbol");

					if (token.text == "not")
						fail("unexpected “not”");

					return ast::Symbol{consume().text};
				case TokenType::String:
					unsupported("string constant");
				case TokenType::Directive:
					if (isAggregateDirective(token.text))
						unsupported("aggregate");

					unsupported("“" + token.text + "” term");
				default:
					break;
			}

			if (token.is("-"))
				unsupported("unary minus");

			if (token.is("|"))
				unsupported("absolute value");

			if (token.is("~"))
				unsupported("bitwise negation");

			if (token.is("("))
			{
				consume();

				if (current().is(")"))
					unsupported("tuple");

				auto term = parseTerm();

				if (current().is(","))
					unsupported("tuple");

				if (current().is(";"))
					unsupported("pool");

				expect(")");

				return term;
			}

			fail("expected term");
		}

		std::int64_t parseNumber(const Token &token) const
		{
			std::int64_t value = 0;
			const auto result = std::from_chars(token.text.data(), token.text.data() + token.text.size(), value);

			if (result.ec != std::errc{})
				throw ParseError(token.location, "integer “" + token.text + "” out of range");

			return value;
		}

		std::vector<Token> m_tokens;
		std::size_t m_position = 0;
		std::size_t m_anonymousCount = 0;
};

////////////////////////////////////////////////////////////////////////////////////////////////////

bool containsAnonymous(const ast::Term &term)
{
	if (term.is<ast::Anonymous>())
		return true;

	if (const auto *binaryOperation = term.as<ast::BinaryOperation>())
		return containsAnonymous(binaryOperation->left) || containsAnonymous(binaryOperation->right);

	return false;
}

}

////////////////////////////////////////////////////////////////////////////////////////////////////

void checkSafety(const ast::Rule &rule)
{
	const auto fail =
		[&](const std::string &message)
		{
			throw SafetyError(toString(rule.location) + ": " + message + " in rule “" + ast::format(rule) + "”");
		};

	std::vector<std::string> bound;

	for (const auto &literal : rule.body)
		if (const auto *positiveLiteral = std::get_if<ast::PositiveLiteral>(&literal))
			for (const auto &argument : positiveLiteral->atom.arguments)
				ast::collectVariables(argument, bound);

	const auto isBound =
		[&](const std::string &name)
		{
			return std::find(bound.begin(), bound.end(), name) != bound.end();
		};

	const auto allBound =
		[&](const ast::Term &term)
		{
			std::vector<std::string> variables;
			ast::collectVariables(term, variables);
			return std::all_of(variables.begin(), variables.end(), isBound);
		};

	// “X = t” binds X once all variables of t are bound
	for (bool changed = true; changed;)
	{
		changed = false;

		for (const auto &literal : rule.body)
		{
			const auto *comparison = std::get_if<ast::Comparison>(&literal);

			if (!comparison || comparison->comparisonOperator != ComparisonOperator::Equal)
				continue;

			const auto bind =
				[&](const ast::Term &variableSide, const ast::Term &otherSide)
				{
					const auto *variable = variableSide.as<ast::Variable>();

					if (!variable || isBound(variable->name) || !allBound(otherSide)
						|| containsAnonymous(otherSide))
					{
						return;
					}

					bound.push_back(variable->name);
					changed = true;
				};

			bind(comparison->left, comparison->right);
			bind(comparison->right, comparison->left);
		}
	}

	if (const auto *atom = ast::headAtom(rule))
		for (const auto &argument : atom->arguments)
			if (containsAnonymous(argument))
				fail("anonymous variable in rule head");

	for (const auto &literal : rule.body)
		if (const auto *comparison = std::get_if<ast::Comparison>(&literal))
			if (containsAnonymous(comparison->left) || containsAnonymous(comparison->right))
				fail("anonymous variable in comparison");

	// Anonymous variables stand for whole arguments only
	for (const auto &literal : rule.body)
		std::visit(
			[&](const auto &literal)
			{
				using T = std::decay_t<decltype(literal)>;

				if constexpr (!std::is_same_v<T, ast::Comparison>)
					for (const auto &argument : literal.atom.arguments)
						if (argument.template is<ast::BinaryOperation>() && containsAnonymous(argument))
							fail("anonymous variable inside an arithmetic term");
			}, literal);

	for (const auto &variable : ast::variablesInOrder(rule))
		if (!isBound(variable))
			fail("unsafe variable “" + variable + "”");
}

////////////////////////////////////////////////////////////////////////////////////////////////////

void checkExternals(const ast::Program &program)
{
	for (const auto &rule : program.rules)
		if (const auto *atom = ast::headAtom(rule))
			if (program.externals.contains(atom->signature()))
				throw LogicError(toString(rule.location) + ": external predicate “"
					+ toString(atom->signature()) + "” occurs in a rule head");
}

////////////////////////////////////////////////////////////////////////////////////////////////////

ast::Program parseProgram(std::string_view source, const std::string &fileName)
{
	Lexer lexer(source, fileName);
	Parser parser(lexer.tokenize());

	auto program = parser.parse();
	checkExternals(program);

	return program;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

ast::Program parseProgram(const std::vector<std::pair<std::string, std::string>> &namedSources)
{
	ast::Program program;

	for (const auto &[fileName, source] : namedSources)
	{
		Lexer lexer(source, fileName);
		Parser parser(lexer.tokenize());

		ast::append(program, parser.parse());
	}

	checkExternals(program);

	return program;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
