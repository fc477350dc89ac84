#include "pencils/parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "pencils/errors.hpp"

namespace pencils {

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind = End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }
    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            bump();
        current_ = Token{};
        current_.line = line_;
        current_.col = col_;
        if (pos_ >= text_.size()) {
            current_.kind = Token::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            current_.kind = Token::Number;
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                current_.text += text_[pos_];
                bump();
            }
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            current_.kind = Token::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '_')) {
                current_.text += text_[pos_];
                bump();
            }
            return;
        }
        if (std::string("+-*/^()").find(c) != std::string::npos) {
            current_.kind = Token::Op;
            current_.text = std::string(1, c);
            bump();
            return;
        }
        throw SyntaxError(line_, col_, std::string("unexpected character '") +
                                           c + "'");
    }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;
};

class Parser {
public:
    Parser(const std::string& text, const FieldPtr& field,
           const std::vector<std::string>& variables)
        : lex_(text), field_(field), variables_(variables) {
        nvars_ = std::max<int>(1, static_cast<int>(variables.size()));
    }

    MultiPoly parse() {
        MultiPoly p = expr();
        const Token& t = lex_.peek();
        if (t.kind != Token::End)
            throw SyntaxError(t.line, t.col, "unexpected '" + t.text + "'");
        return p;
    }

private:
    bool is_op(const char* s) const {
        return lex_.peek().kind == Token::Op && lex_.peek().text == s;
    }

    MultiPoly expr() {
        MultiPoly acc = term();
        while (is_op("+") || is_op("-")) {
            Token op = lex_.take();
            MultiPoly rhs = term();
            acc = op.text == "+" ? acc + rhs : acc - rhs;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        while (is_op("*") || is_op("/")) {
            Token op = lex_.take();
            MultiPoly rhs = factor();
            if (op.text == "*") {
                acc = acc * rhs;
            } else {
                if (!rhs.is_constant() || rhs.is_zero())
                    throw SyntaxError(op.line, op.col,
                                      "division only by nonzero constants");
                acc = acc * rhs.coeff(Monomial{}).inverse();
            }
        }
        return acc;
    }

    MultiPoly factor() {
        if (is_op("-")) {
            Token op = lex_.take();
            (void)op;
            return -factor();
        }
        if (is_op("+")) {
            lex_.take();
            return factor();
        }
        MultiPoly base = primary();
        if (is_op("^")) {
            Token op = lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Number)
                throw SyntaxError(e.line, e.col, "exponent must be an integer");
            long n = std::stol(e.text);
            (void)op;
            MultiPoly acc = MultiPoly::constant(field_, nvars_, field_->one());
            for (long i = 0; i < n; ++i) acc = acc * base;
            return acc;
        }
        return base;
    }

    MultiPoly primary() {
        Token t = lex_.take();
        if (t.kind == Token::Number) {
            Rational r(t.text);
            r.canonicalize();
            return MultiPoly::constant(field_, nvars_, field_->from_rational(r));
        }
        if (t.kind == Token::Ident) {
            for (size_t i = 0; i < variables_.size(); ++i)
                if (variables_[i] == t.text)
                    return MultiPoly::variable(field_, nvars_,
                                               static_cast<int>(i));
            if (t.text == field_->generator_symbol() && field_->degree() > 1)
                return MultiPoly::constant(field_, nvars_, field_->generator());
            throw SyntaxError(t.line, t.col, "unknown symbol '" + t.text + "'");
        }
        if (t.kind == Token::Op && t.text == "(") {
            MultiPoly p = expr();
            const Token& close = lex_.peek();
            if (!(close.kind == Token::Op && close.text == ")"))
                throw SyntaxError(close.line, close.col, "expected ')'");
            lex_.take();
            return p;
        }
        throw SyntaxError(t.line, t.col,
                          t.kind == Token::End ? "unexpected end of input"
                                               : "unexpected '" + t.text + "'");
    }

    Lexer lex_;
    FieldPtr field_;
    const std::vector<std::string>& variables_;
    int nvars_;
};

struct RawSection {
    std::map<std::string, std::string> values;
    std::map<std::string, int> lines;
};

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::map<std::string, RawSection> split_sections(const std::string& text) {
    std::map<std::string, RawSection> sections;
    std::istringstream in(text);
    std::string line, current;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (s.front() == '[' && s.back() == ']') {
            current = s.substr(1, s.size() - 2);
            sections[current];
            continue;
        }
        size_t eq = s.find('=');
        if (current.empty() || eq == std::string::npos)
            throw SyntaxError(lineno, 1, "expected [section] or key = \"value\"");
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        if (value.size() < 2 || value.front() != '"' || value.back() != '"')
            throw SyntaxError(lineno, static_cast<int>(eq) + 2,
                              "value must be double-quoted");
        sections[current].values[key] = value.substr(1, value.size() - 2);
        sections[current].lines[key] = lineno;
    }
    return sections;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::string s = trim(token);
        if (s.empty()) throw InputError("empty entry in coefficient list");
        try {
            Rational r(s);
            r.canonicalize();
            out.push_back(r);
        } catch (const std::invalid_argument&) {
            throw InputError("bad rational literal '" + s + "'");
        }
    }
    return out;
}

}  // namespace

MultiPoly parse_polynomial(const std::string& text, const FieldPtr& field,
                           const std::vector<std::string>& variables,
                           bool require_homogeneous) {
    Parser parser(text, field, variables);
    MultiPoly p = parser.parse();
    if (require_homogeneous && !p.is_homogeneous())
        throw InputError("polynomial is not homogeneous: " + text);
    return p;
}

FieldElement parse_field_element(const std::string& text, const FieldPtr& field) {
    MultiPoly p = parse_polynomial(text, field, {});
    if (!p.is_constant())
        throw InputError("expected a constant expression: " + text);
    return p.coeff(Monomial{});
}

ParsedInput parse_input(const std::string& text) {
    auto sections = split_sections(text);
    for (auto& [name, sec] : sections)
        if (name != "field" && name != "pencil")
            throw InputError("unknown section [" + name + "]");

    FieldPtr field;
    auto fit = sections.find("field");
    if (fit == sections.end()) {
        field = NumberField::rationals();
    } else {
        auto& sec = fit->second;
        auto g = sec.values.find("generator");
        auto m = sec.values.find("min_poly");
        if (g == sec.values.end() || m == sec.values.end())
            throw InputError("[field] needs generator and min_poly");
        field = NumberField::create(g->second, parse_rational_list(m->second));
        for (auto& [key, value] : sec.values)
            if (key != "generator" && key != "min_poly")
                throw InputError("unknown key '" + key + "' in [field]");
    }

    auto pit = sections.find("pencil");
    if (pit == sections.end()) throw InputError("missing [pencil] section");
    auto& psec = pit->second;
    auto fF = psec.values.find("F");
    auto fG = psec.values.find("G");
    if (fF == psec.values.end() || fG == psec.values.end())
        throw InputError("[pencil] needs F and G");
    for (auto& [key, value] : psec.values)
        if (key != "F" && key != "G")
            throw InputError("unknown key '" + key + "' in [pencil]");

    ParsedInput out;
    out.field = field;
    out.f_text = fF->second;
    out.g_text = fG->second;
    out.F = parse_polynomial(out.f_text, field, {"X", "Y", "Z"}, true);
    out.G = parse_polynomial(out.g_text, field, {"X", "Y", "Z"}, true);
    return out;
}

}  // namespace pencils
