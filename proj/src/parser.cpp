#include "nlpabs/parser.hpp"

#include "nlpabs/unify.hpp"

#include <cctype>
#include <optional>

namespace nlpabs {

namespace {

enum class Tok {
    Ident,
    Var,
    Int,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Bar,
    Dot,
    ColonDash,
    Naf, // \+
    Equals,
    End,
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t line;
    std::size_t column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_blank();
        std::size_t line = line_;
        std::size_t col = col_;
        if (eof()) return {Tok::End, "", line, col};
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return {Tok::Int, take_while([](char d) {
                        return std::isdigit(static_cast<unsigned char>(d)) != 0;
                    }),
                    line, col};
        }
        if (std::islower(static_cast<unsigned char>(c))) {
            return {Tok::Ident, take_ident(), line, col};
        }
        if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = take_ident();
            if (is_reserved_var(name)) {
                throw ParseError("variable name '" + name +
                                     "' uses a reserved namespace",
                                 line, col);
            }
            return {Tok::Var, std::move(name), line, col};
        }
        switch (c) {
        case '(': advance(); return {Tok::LParen, "(", line, col};
        case ')': advance(); return {Tok::RParen, ")", line, col};
        case '[': advance(); return {Tok::LBracket, "[", line, col};
        case ']': advance(); return {Tok::RBracket, "]", line, col};
        case ',': advance(); return {Tok::Comma, ",", line, col};
        case '|': advance(); return {Tok::Bar, "|", line, col};
        case '.': advance(); return {Tok::Dot, ".", line, col};
        case '=': advance(); return {Tok::Equals, "=", line, col};
        case ':':
            advance();
            if (!eof() && peek() == '-') {
                advance();
                return {Tok::ColonDash, ":-", line, col};
            }
            throw ParseError("unsupported token ':'", line, col);
        case '\\':
            advance();
            if (!eof() && peek() == '+') {
                advance();
                return {Tok::Naf, "\\+", line, col};
            }
            throw ParseError("unsupported token '\\'", line, col);
        case ';':
            throw ParseError("disjunction ';' is not supported", line, col);
        case '!':
            throw ParseError("cut '!' is not supported", line, col);
        case '-':
            advance();
            if (!eof() && peek() == '>') {
                throw ParseError("if-then-else '->' is not supported", line,
                                 col);
            }
            throw ParseError("arithmetic operator '-' is not supported", line,
                             col);
        case '+': case '*': case '/': case '<': case '>':
            throw ParseError(std::string("arithmetic or comparison operator '") +
                                 c + "' is not supported",
                             line, col);
        case '\'':
            throw ParseError("quoted atoms are not supported", line, col);
        case '"':
            throw ParseError("strings are not supported", line, col);
        case '?':
            throw ParseError("'?-' directives are not supported", line, col);
        default:
            throw ParseError("unexpected character", line, col);
        }
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (!eof()) {
            char c = peek();
            if (c == '%') {
                while (!eof() && peek() != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    template <typename Pred>
    std::string take_while(Pred pred) {
        std::string out;
        while (!eof() && pred(peek())) {
            out.push_back(peek());
            advance();
        }
        return out;
    }

    std::string take_ident() {
        return take_while([](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
        });
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

class Parser {
public:
    explicit Parser(std::string_view text, bool allow_equals = false)
        : lexer_(text), allow_equals_(allow_equals) {
        shift();
    }

    PointedProgram parse_program() {
        std::vector<Clause> clauses;
        std::vector<Query> queries;
        while (cur_.kind != Tok::End) {
            if (cur_.kind == Tok::ColonDash) {
                queries.push_back(parse_directive());
            } else {
                clauses.push_back(parse_clause());
            }
        }
        if (clauses.empty()) {
            throw ParseError("program has no clauses", cur_.line, cur_.column);
        }
        check_duplicate_queries(queries);
        return PointedProgram(std::move(clauses), std::move(queries));
    }

    std::map<std::size_t, std::vector<Substitution>>
    parse_samples(const PointedProgram& program) {
        std::map<std::size_t, std::vector<Substitution>> out;
        while (cur_.kind != Tok::End) {
            Token at = cur_;
            if (cur_.kind != Tok::Ident || cur_.text != "sample") {
                throw ParseError("expected a sample(...) term", at.line,
                                 at.column);
            }
            shift();
            expect(Tok::LParen, "'('");
            Token idx_tok = expect(Tok::Int, "a goal index");
            std::size_t k = std::stoull(idx_tok.text);
            if (!program.is_query_index(k)) {
                throw ParseError("unit " + idx_tok.text +
                                     " is not a goal of the program",
                                 idx_tok.line, idx_tok.column);
            }
            Substitution theta;
            while (cur_.kind == Tok::Comma) {
                shift();
                Token var_tok = expect(Tok::Var, "a variable");
                if (var_tok.text == "_") {
                    throw ParseError("'_' cannot be bound by a sample",
                                     var_tok.line, var_tok.column);
                }
                if (!program.vars_of_unit(k).count(var_tok.text)) {
                    throw ParseError("variable " + var_tok.text +
                                         " does not occur in goal " +
                                         std::to_string(k),
                                     var_tok.line, var_tok.column);
                }
                expect(Tok::Equals, "'='");
                TermPtr value = parse_term();
                if (!theta.emplace(var_tok.text, value).second) {
                    throw ParseError("variable " + var_tok.text +
                                         " bound twice in one sample",
                                     var_tok.line, var_tok.column);
                }
            }
            expect(Tok::RParen, "')'");
            expect(Tok::Dot, "'.'");
            if (!is_solved(theta)) {
                throw ParseError("sample substitution is not in solved form",
                                 at.line, at.column);
            }
            out[k].push_back(std::move(theta));
        }
        return out;
    }

private:
    void shift() { cur_ = lexer_.next(); }

    Token expect(Tok kind, const std::string& what) {
        if (cur_.kind != kind) {
            throw ParseError("expected " + what +
                                 (cur_.kind == Tok::End
                                      ? " but found end of input"
                                      : " but found '" + cur_.text + "'"),
                             cur_.line, cur_.column);
        }
        Token t = cur_;
        shift();
        return t;
    }

    Clause parse_clause() {
        Clause c;
        c.head = parse_atom();
        if (cur_.kind == Tok::ColonDash) {
            shift();
            c.body = parse_literal_seq();
        }
        expect(Tok::Dot, "'.'");
        return c;
    }

    Query parse_directive() {
        expect(Tok::ColonDash, "':-'");
        Token name = expect(Tok::Ident, "a directive name");
        if (name.text != "query") {
            throw ParseError("unsupported directive '" + name.text + "'",
                             name.line, name.column);
        }
        expect(Tok::LParen, "'('");
        Query q;
        q.body = parse_goal();
        expect(Tok::Comma, "','");
        q.annotation = parse_term();
        expect(Tok::RParen, "')'");
        expect(Tok::Dot, "'.'");
        return q;
    }

    std::vector<Literal> parse_goal() {
        if (cur_.kind == Tok::LParen) {
            shift();
            std::vector<Literal> body = parse_literal_seq();
            expect(Tok::RParen, "')'");
            return body;
        }
        return {parse_literal()};
    }

    std::vector<Literal> parse_literal_seq() {
        std::vector<Literal> body;
        body.push_back(parse_literal());
        while (cur_.kind == Tok::Comma) {
            shift();
            body.push_back(parse_literal());
        }
        return body;
    }

    Literal parse_literal() {
        Literal l;
        if (cur_.kind == Tok::Naf) {
            shift();
            l.positive = false;
        }
        l.atom = parse_atom();
        return l;
    }

    Atom parse_atom() {
        Token name = expect(Tok::Ident, "a predicate symbol");
        Atom a;
        a.pred = name.text;
        if (cur_.kind == Tok::LParen) {
            shift();
            a.args.push_back(parse_term());
            while (cur_.kind == Tok::Comma) {
                shift();
                a.args.push_back(parse_term());
            }
            expect(Tok::RParen, "')'");
        }
        reject_infix();
        return a;
    }

    TermPtr parse_term() {
        TermPtr t = parse_primary();
        reject_infix();
        return t;
    }

    TermPtr parse_primary() {
        switch (cur_.kind) {
        case Tok::Var: {
            Token v = cur_;
            shift();
            if (v.text == "_") {
                return mk_var("_A" + std::to_string(anon_counter_++));
            }
            return mk_var(v.text);
        }
        case Tok::Int: {
            Token n = cur_;
            shift();
            return mk_fun(n.text);
        }
        case Tok::Ident: {
            Token f = cur_;
            shift();
            if (cur_.kind != Tok::LParen) return mk_fun(f.text);
            shift();
            std::vector<TermPtr> args;
            args.push_back(parse_term());
            while (cur_.kind == Tok::Comma) {
                shift();
                args.push_back(parse_term());
            }
            expect(Tok::RParen, "')'");
            return mk_fun(f.text, std::move(args));
        }
        case Tok::LBracket:
            return parse_list();
        default:
            throw ParseError("expected a term" +
                                 (cur_.kind == Tok::End
                                      ? std::string(" but found end of input")
                                      : " but found '" + cur_.text + "'"),
                             cur_.line, cur_.column);
        }
    }

    TermPtr parse_list() {
        expect(Tok::LBracket, "'['");
        if (cur_.kind == Tok::RBracket) {
            shift();
            return mk_nil();
        }
        std::vector<TermPtr> elems;
        elems.push_back(parse_term());
        while (cur_.kind == Tok::Comma) {
            shift();
            elems.push_back(parse_term());
        }
        TermPtr tail = mk_nil();
        if (cur_.kind == Tok::Bar) {
            shift();
            tail = parse_term();
        }
        expect(Tok::RBracket, "']'");
        for (auto it = elems.rbegin(); it != elems.rend(); ++it) {
            tail = mk_cons(*it, tail);
        }
        return tail;
    }

    // Equality and other infix operators are not part of the language;
    // produce a pointed message instead of a generic syntax error.
    void reject_infix() {
        if (cur_.kind == Tok::Equals && !allow_equals_) {
            throw ParseError("infix '=' is not supported", cur_.line,
                             cur_.column);
        }
    }

    void check_duplicate_queries(const std::vector<Query>& queries) {
        std::vector<TermPtr> shapes;
        shapes.reserve(queries.size());
        for (const auto& q : queries) {
            std::vector<TermPtr> parts;
            for (const auto& l : q.body) {
                TermPtr a = mk_fun(l.atom.pred, l.atom.args);
                parts.push_back(l.positive ? a : mk_fun("\\+", {a}));
            }
            parts.push_back(q.annotation);
            shapes.push_back(canonicalize(mk_fun("query", std::move(parts))));
        }
        for (std::size_t a = 0; a < shapes.size(); ++a) {
            for (std::size_t b = a + 1; b < shapes.size(); ++b) {
                if (term_eq(shapes[a], shapes[b])) {
                    throw ParseError("duplicate query directive", 1, 1);
                }
            }
        }
    }

    Lexer lexer_;
    Token cur_{Tok::End, "", 1, 1};
    std::size_t anon_counter_ = 0;
    bool allow_equals_ = false;
};

} // namespace

PointedProgram parse_program(std::string_view text) {
    return Parser(text).parse_program();
}

std::map<std::size_t, std::vector<Substitution>>
parse_samples(std::string_view text, const PointedProgram& program) {
    return Parser(text, /*allow_equals=*/true).parse_samples(program);
}

} // namespace nlpabs
