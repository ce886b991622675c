#include <anthem/oracle/FormulaReader.h>

#include <cctype>
#include <map>
#include <optional>

namespace anthem
{
namespace oracle
{

////////////////////////////////////////////////////////////////////////////////////////////////////
//
// FormulaReader
//
////////////////////////////////////////////////////////////////////////////////////////////////////

namespace
{

struct Token
{
	enum class Kind
	{
		Identifier,
		Variable,
		Integer,
		Symbol,
		End,
	};

	Kind kind;
	std::string text;
	std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text)
{
	static const std::vector<std::string> symbols =
		{"<->", "->", "!=", "<=", ">=", "..", "<", ">", "=", "(", ")", ",", "+", "-", "*", "/", "@"};

	std::vector<Token> tokens;
	std::size_t position = 0;

	const auto isNameCharacter =
		[](char c)
		{
			return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
		};

	const auto endsTerm =
		[&]()
		{
			if (tokens.empty())
				return false;

			const auto &last = tokens.back();

			return last.kind != Token::Kind::Symbol || last.text == ")";
		};

	while (position < text.size())
	{
		const auto c = text[position];

		if (std::isspace(static_cast<unsigned char>(c)))
		{
			position++;
			continue;
		}

		const auto start = position;

		if (c == '#')
		{
			position++;

			while (position < text.size() && isNameCharacter(text[position]))
				position++;

			tokens.push_back({Token::Kind::Identifier, std::string(text.substr(start, position - start)), start});
			continue;
		}

		const auto isNegativeInteger = c == '-' && position + 1 < text.size()
			&& std::isdigit(static_cast<unsigned char>(text[position + 1])) && !endsTerm();

		if (std::isdigit(static_cast<unsigned char>(c)) || isNegativeInteger)
		{
			position++;

			while (position < text.size() && std::isdigit(static_cast<unsigned char>(text[position])))
				position++;

			tokens.push_back({Token::Kind::Integer, std::string(text.substr(start, position - start)), start});
			continue;
		}

		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
		{
			while (position < text.size() && isNameCharacter(text[position]))
				position++;

			const auto kind = std::isupper(static_cast<unsigned char>(c))
				? Token::Kind::Variable
				: Token::Kind::Identifier;

			tokens.push_back({kind, std::string(text.substr(start, position - start)), start});
			continue;
		}

		bool matched = false;

		for (const auto &symbol : symbols)
			if (text.substr(position, symbol.size()) == symbol)
			{
				tokens.push_back({Token::Kind::Symbol, symbol, start});
				position += symbol.size();
				matched = true;
				break;
			}

		if (!matched)
			throw ParseError({"<formula>", 1, position + 1}, std::string("unexpected character “") + c + "”");
	}

	tokens.push_back({Token::Kind::End, "", text.size()});

	return tokens;
}

////////////////////////////////////////////////////////////////////////////////////////////////////

class Reader
{
	public:
		explicit Reader(std::string_view text)
		:	m_tokens{tokenize(text)}
		{
		}

		bool atEnd() const
		{
			return current().kind == Token::Kind::End;
		}

		std::optional<fol::IntegerAnnotation> tryAnnotation()
		{
			// int(p/n@k)
			const auto start = m_position;

			if (!acceptIdentifier("int") || !accept("("))
			{
				m_position = start;
				return std::nullopt;
			}

			if (current().kind != Token::Kind::Identifier || peek(1).text != "/")
			{
				m_position = start;
				return std::nullopt;
			}

			fol::IntegerAnnotation annotation;
			annotation.predicate.name = current().text;
			m_position++;
			expect("/");
			annotation.predicate.arity = static_cast<std::size_t>(expectInteger());
			expect("@");
			annotation.position = static_cast<std::size_t>(expectInteger());
			expect(")");

			return annotation;
		}

		fol::Formula parseFormula()
		{
			return parseBiconditional();
		}

	private:
		const Token &current() const
		{
			return m_tokens[m_position];
		}

		const Token &peek(std::size_t distance) const
		{
			return m_tokens[std::min(m_position + distance, m_tokens.size() - 1)];
		}

		bool isSymbol(const char *text) const
		{
			return current().kind == Token::Kind::Symbol && current().text == text;
		}

		bool accept(const char *text)
		{
			if (!isSymbol(text))
				return false;

			m_position++;
			return true;
		}

		bool acceptIdentifier(const char *text)
		{
			if (current().kind != Token::Kind::Identifier || current().text != text)
				return false;

			m_position++;
			return true;
		}

		[[noreturn]] void fail(const std::string &message) const
		{
			throw ParseError({"<formula>", 1, current().offset + 1}, message);
		}

		void expect(const char *text)
		{
			if (!accept(text))
				fail(std::string("expected “") + text + "”");
		}

		std::int64_t expectInteger()
		{
			if (current().kind != Token::Kind::Integer)
				fail("expected integer");

			const auto value = std::stoll(current().text);
			m_position++;
			return value;
		}

		////////////////////////////////////////////////////////////////////////////////////////////

		fol::Formula parseBiconditional()
		{
			auto left = parseImplication();

			if (accept("<->"))
				return fol::Biconditional{left, parseImplication()};

			return left;
		}

		fol::Formula parseImplication()
		{
			auto antecedent = parseDisjunction();

			if (accept("->"))
				return fol::Implies{antecedent, parseImplication()};

			return antecedent;
		}

		fol::Formula parseDisjunction()
		{
			std::vector<fol::Formula> arguments{parseConjunction()};

			while (acceptIdentifier("or"))
				arguments.push_back(parseConjunction());

			if (arguments.size() == 1)
				return arguments.front();

			return fol::Or{std::move(arguments)};
		}

		fol::Formula parseConjunction()
		{
			std::vector<fol::Formula> arguments{parseUnary()};

			while (acceptIdentifier("and"))
				arguments.push_back(parseUnary());

			if (arguments.size() == 1)
				return arguments.front();

			return fol::And{std::move(arguments)};
		}

		fol::Formula parseUnary()
		{
			if (acceptIdentifier("not"))
				return fol::Not{parseUnary()};

			const auto isForAll = current().kind == Token::Kind::Identifier && current().text == "forall";
			const auto isExists = current().kind == Token::Kind::Identifier && current().text == "exists";

			if (isForAll || isExists)
			{
				m_position++;

				std::vector<fol::Variable> variables;

				do
				{
					if (current().kind != Token::Kind::Variable)
						fail("expected variable");

					variables.push_back(makeVariable(current().text));
					m_position++;
				}
				while (accept(","));

				for (const auto &variable : variables)
					m_scope[nameOf(variable)].push_back(variable);

				auto argument = parseUnary();

				for (const auto &variable : variables)
					m_scope[nameOf(variable)].pop_back();

				if (isForAll)
					return fol::ForAll{std::move(variables), std::move(argument)};

				return fol::Exists{std::move(variables), std::move(argument)};
			}

			if (acceptIdentifier("#true"))
				return fol::Boolean{true};

			if (acceptIdentifier("#false"))
				return fol::Boolean{false};

			if (isSymbol("("))
			{
				// A parenthesized formula or the start of a term, as in “(N2 * N3) = N1”
				const auto start = m_position;
				const auto scope = m_scope;
				const auto free = m_free;

				try
				{
					m_position++;
					auto formula = parseFormula();
					expect(")");

					if (!isComparisonOperator() && !isIdentifier("in"))
						return formula;
				}
				catch (const ParseError &)
				{
				}

				m_position = start;
				m_scope = scope;
				m_free = free;
				return parseComparison();
			}

			if (current().kind == Token::Kind::Identifier && peek(1).text == "(")
				return parsePredicate();

			if (current().kind == Token::Kind::Identifier && !isComparisonOperator(peek(1)) && peek(1).text != "in")
			{
				fol::Predicate predicate{current().text, {}};
				m_position++;
				return predicate;
			}

			return parseComparison();
		}

		fol::Formula parsePredicate()
		{
			fol::Predicate predicate{current().text, {}};
			m_position++;
			expect("(");

			do
				predicate.arguments.push_back(parseTerm());
			while (accept(","));

			expect(")");

			return predicate;
		}

		bool isIdentifier(const char *text) const
		{
			return current().kind == Token::Kind::Identifier && current().text == text;
		}

		static bool isComparisonOperator(const Token &token)
		{
			if (token.kind != Token::Kind::Symbol)
				return false;

			return token.text == "=" || token.text == "!=" || token.text == "<" || token.text == "<="
				|| token.text == ">" || token.text == ">=";
		}

		bool isComparisonOperator() const
		{
			return isComparisonOperator(current());
		}

		fol::Formula parseComparison()
		{
			auto left = parseTerm();

			if (acceptIdentifier("in"))
				return fol::In{left, parseSetTerm()};

			if (!isComparisonOperator())
				fail("expected comparison operator or “in”");

			static const std::map<std::string, ComparisonOperator> operators =
				{
					{"=", ComparisonOperator::Equal},
					{"!=", ComparisonOperator::NotEqual},
					{"<", ComparisonOperator::Less},
					{"<=", ComparisonOperator::LessEqual},
					{">", ComparisonOperator::Greater},
					{">=", ComparisonOperator::GreaterEqual},
				};

			const auto comparisonOperator = operators.at(current().text);
			m_position++;

			return fol::Comparison{comparisonOperator, left, parseTerm()};
		}

		////////////////////////////////////////////////////////////////////////////////////////////

		// Intervals may appear unparenthesized right of “in”
		fol::Term parseSetTerm()
		{
			auto left = parseTerm();

			if (accept(".."))
				return fol::SetOperation{BinaryOperator::Interval, left, parseTerm()};

			return left;
		}

		fol::Term parseTerm()
		{
			const auto &token = current();

			if (token.kind == Token::Kind::Integer)
			{
				m_position++;
				return fol::IntegerConstant{std::stoll(token.text)};
			}

			if (token.kind == Token::Kind::Identifier)
			{
				m_position++;
				return fol::SymbolicConstant{token.text};
			}

			if (token.kind == Token::Kind::Variable)
			{
				m_position++;
				return lookupVariable(token.text);
			}

			if (!accept("("))
				fail("expected term");

			auto left = parseTerm();

			static const std::map<std::string, BinaryOperator> operators =
				{
					{"+", BinaryOperator::Plus},
					{"-", BinaryOperator::Minus},
					{"*", BinaryOperator::Multiplication},
					{"/", BinaryOperator::Division},
					{"..", BinaryOperator::Interval},
				};

			if (accept(")"))
				return left;

			const auto match = current().kind == Token::Kind::Symbol
				? operators.find(current().text)
				: operators.end();

			if (match == operators.end())
				fail("expected operator");

			m_position++;
			auto right = parseTerm();
			expect(")");

			return makeOperation(match->second, std::move(left), std::move(right));
		}

		static bool mentionsIntegerVariable(const fol::Term &term)
		{
			for (const auto &variable : fol::variables(term))
				if (variable.sort == fol::Sort::Integer)
					return true;

			return false;
		}

		static fol::Term makeOperation(BinaryOperator binaryOperator, fol::Term left, fol::Term right)
		{
			const auto isArithmetic = binaryOperator == BinaryOperator::Plus
				|| binaryOperator == BinaryOperator::Minus || binaryOperator == BinaryOperator::Multiplication;

			if (isArithmetic && fol::isIntegerValued(left) && fol::isIntegerValued(right)
				&& (mentionsIntegerVariable(left) || mentionsIntegerVariable(right)))
			{
				return fol::Arithmetic{binaryOperator, std::move(left), std::move(right)};
			}

			return fol::SetOperation{binaryOperator, std::move(left), std::move(right)};
		}

		////////////////////////////////////////////////////////////////////////////////////////////

		fol::Variable makeVariable(const std::string &name)
		{
			const auto sort = name.front() == 'N' ? fol::Sort::Integer : fol::Sort::General;
			const auto role = name.front() == 'V' ? fol::VariableRole::Head : fol::VariableRole::Bound;

			auto variable = fol::Variable::fresh(sort, role);
			m_names[variable.id] = name;

			return variable;
		}

		const std::string &nameOf(const fol::Variable &variable)
		{
			return m_names.at(variable.id);
		}

		fol::Variable lookupVariable(const std::string &name)
		{
			const auto scope = m_scope.find(name);

			if (scope != m_scope.end() && !scope->second.empty())
				return scope->second.back();

			// Free variables keep their identity within one reader
			const auto free = m_free.find(name);

			if (free != m_free.end())
				return free->second;

			const auto variable = makeVariable(name);
			m_free.emplace(name, variable);

			return variable;
		}

		std::vector<Token> m_tokens;
		std::size_t m_position = 0;
		std::map<std::string, std::vector<fol::Variable>> m_scope;
		std::map<std::string, fol::Variable> m_free;
		std::map<std::uint64_t, std::string> m_names;
};

}

////////////////////////////////////////////////////////////////////////////////////////////////////

ReadResult readFormulas(std::string_view text)
{
	Reader reader(text);
	ReadResult result;

	while (!reader.atEnd())
	{
		if (auto annotation = reader.tryAnnotation())
			result.annotations.push_back(*annotation);
		else
			result.formulas.push_back(reader.parseFormula());
	}

	return result;
}

fol::Formula readFormula(std::string_view text)
{
	auto result = readFormulas(text);

	if (result.formulas.size() != 1 || !result.annotations.empty())
		throw ParseError({"<formula>", 1, 1}, "expected exactly one formula");

	return result.formulas.front();
}

////////////////////////////////////////////////////////////////////////////////////////////////////

}
}
