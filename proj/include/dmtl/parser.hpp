#pragma once

// Recursive-descent parser for the textual rule / fact / query syntax.
//
//   rule      := [literal {"," literal}] "->" literal "."
//   literal   := unary {("since" | "until") interval unary}
//   unary     := ("boxminus" | "boxplus" | "diamondminus" | "diamondplus") interval unary
//              | "top" | "bottom" | atom | "(" literal ")"
//   atom      := name ["(" term {"," term} ")"]
//   interval  := ("[" | "(") endpoint "," endpoint ("]" | ")")
//   endpoint  := ["-" | "+"] (number [unit] | "inf")
//   fact      := atom "@" interval "."
//
// Variables start with an uppercase letter or '_', constants with a
// lowercase letter, a digit, or are double-quoted. `%` starts a comment.

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmtl/ast.hpp"
#include "dmtl/model.hpp"

namespace dmtl {

struct ParseOptions {
    /// Accept predicates with the reserved `_aux` prefix (used when reading
    /// back normalized programs).
    bool allow_reserved = false;
};

namespace detail {

enum class Tok { End, Name, Number, String, LParen, RParen, LBracket, RBracket, Comma, Dot, Arrow, At, Minus, Plus };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    char unit = 0;  // 's', 'm', 'h', 'd' for durations, 0 otherwise
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            Token t;
            t.line = line_;
            t.column = col_;
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Tok::Name;
                while (pos_ < src_.size() && is_word(src_[pos_])) t.text.push_back(take());
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                lex_number(t);
            } else if (c == '"') {
                lex_string(t);
            } else if (c == '-' && peek(1) == '>') {
                take();
                take();
                t.kind = Tok::Arrow;
            } else {
                switch (c) {
                    case '(': t.kind = Tok::LParen; break;
                    case ')': t.kind = Tok::RParen; break;
                    case '[': t.kind = Tok::LBracket; break;
                    case ']': t.kind = Tok::RBracket; break;
                    case ',': t.kind = Tok::Comma; break;
                    case '.': t.kind = Tok::Dot; break;
                    case '@': t.kind = Tok::At; break;
                    case '-': t.kind = Tok::Minus; break;
                    case '+': t.kind = Tok::Plus; break;
                    default: throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
                }
                take();
            }
            out.push_back(std::move(t));
        }
    }

  private:
    static bool is_word(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '%') {
                while (pos_ < src_.size() && src_[pos_] != '\n') take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                return;
            }
        }
    }

    void lex_number(Token& t) {
        t.kind = Tok::Number;
        auto digits = [&] {
            while (std::isdigit(static_cast<unsigned char>(peek()))) t.text.push_back(take());
        };
        digits();
        if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            t.text.push_back(take());
            digits();
        } else if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
            t.text.push_back(take());
            digits();
        }
        char u = peek();
        if ((u == 's' || u == 'm' || u == 'h' || u == 'd') && !is_word(peek(1))) {
            t.unit = take();
        } else if (is_word(u)) {
            throw ParseError("malformed number '" + t.text + u + "'", t.line, t.column);
        }
    }

    void lex_string(Token& t) {
        t.kind = Tok::String;
        take();
        for (;;) {
            if (pos_ >= src_.size()) throw ParseError("unterminated string", t.line, t.column);
            char c = take();
            if (c == '"') return;
            if (c == '\\') {
                if (pos_ >= src_.size()) throw ParseError("unterminated string", t.line, t.column);
                c = take();
            }
            t.text.push_back(c);
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

inline bool is_operator_keyword(const std::string& w) {
    return w == "boxminus" || w == "boxplus" || w == "diamondminus" || w == "diamondplus" || w == "since" ||
           w == "until" || w == "top" || w == "bottom";
}

inline Rational unit_scale(char unit) {
    switch (unit) {
        case 'd': return Rational(1);
        case 'h': return Rational(1, 24);
        case 'm': return Rational(1, 1440);
        case 's': return Rational(1, 86400);
        default: return Rational(1);
    }
}

class Parser {
  public:
    Parser(std::string_view src, ParseOptions opts) : tokens_(Lexer(src).run()), opts_(opts) {}

    Program program() {
        Program p;
        while (!at(Tok::End)) {
            Rule r = rule();
            r.id = "r" + std::to_string(p.rules.size());
            p.rules.push_back(std::move(r));
        }
        return p;
    }

    Database database() {
        Database db;
        while (!at(Tok::End)) {
            Fact f = fact();
            expect(Tok::Dot, "'.'");
            db.add(f);
        }
        return db;
    }

    Fact single_fact() {
        Fact f = fact();
        if (at(Tok::Dot)) advance();
        if (!at(Tok::End)) fail("trailing input after fact");
        return f;
    }

    Rule single_rule() {
        Rule r = rule();
        if (!at(Tok::End)) fail("trailing input after rule");
        r.id = "r0";
        return r;
    }

  private:
    const Token& cur() const { return tokens_[pos_]; }
    bool at(Tok k) const { return cur().kind == k; }
    bool at_word(std::string_view w) const { return at(Tok::Name) && cur().text == w; }
    const Token& advance() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, cur().line, cur().column); }
    [[noreturn]] static void fail_at(const Token& t, const std::string& msg) { throw ParseError(msg, t.line, t.column); }

    const Token& expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what + describe_current());
        return advance();
    }

    std::string describe_current() const {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::End: return ", found end of input";
            case Tok::Name:
            case Tok::Number: return ", found '" + t.text + "'";
            case Tok::String: return ", found string";
            default: return "";
        }
    }

    Rule rule() {
        const Token& start = cur();
        Rule r;
        if (!at(Tok::Arrow)) {
            r.body.push_back(literal());
            while (at(Tok::Comma)) {
                advance();
                r.body.push_back(literal());
            }
        }
        expect(Tok::Arrow, "'->'");
        const Token& head_tok = cur();
        r.head = literal();
        expect(Tok::Dot, "'.'");
        check_head(r.head, head_tok);
        check_range_restricted(r, start);
        return r;
    }

    static void check_head(const Literal& l, const Token& where) {
        switch (l.kind()) {
            case Literal::Kind::Top:
            case Literal::Kind::Atom: return;
            case Literal::Kind::BoxMinus:
            case Literal::Kind::BoxPlus: check_head(l.operand(), where); return;
            default:
                fail_at(where, "head may only contain top, atoms, boxminus and boxplus");
        }
    }

    static void check_range_restricted(const Rule& r, const Token& where) {
        std::vector<std::string> body_vars;
        for (const auto& l : r.body) collect_variables(l, body_vars);
        std::vector<std::string> head_vars;
        collect_variables(r.head, head_vars);
        for (const auto& v : head_vars)
            if (std::find(body_vars.begin(), body_vars.end(), v) == body_vars.end())
                fail_at(where, "rule is not range-restricted: head variable " + v + " does not occur in the body");
    }

    Literal literal() {
        Literal left = unary();
        while (at_word("since") || at_word("until")) {
            bool since = cur().text == "since";
            advance();
            Interval rho = temporal_interval();
            Literal right = unary();
            left = since ? Literal::since(std::move(left), std::move(rho), std::move(right))
                         : Literal::until(std::move(left), std::move(rho), std::move(right));
        }
        return left;
    }

    Literal unary() {
        if (at(Tok::LParen)) {
            advance();
            Literal inner = literal();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (!at(Tok::Name)) fail("expected a literal" + describe_current());
        const std::string& w = cur().text;
        std::optional<Literal::Kind> op;
        if (w == "boxminus") op = Literal::Kind::BoxMinus;
        if (w == "boxplus") op = Literal::Kind::BoxPlus;
        if (w == "diamondminus") op = Literal::Kind::DiamondMinus;
        if (w == "diamondplus") op = Literal::Kind::DiamondPlus;
        if (op) {
            advance();
            Interval rho = temporal_interval();
            return Literal::unary(*op, std::move(rho), unary());
        }
        if (w == "top") {
            advance();
            return Literal::top();
        }
        if (w == "bottom") {
            advance();
            return Literal::bottom();
        }
        if (w == "since" || w == "until") fail("'" + w + "' needs a left operand");
        return Literal::atom(atom());
    }

    Atom atom() {
        const Token& name = expect(Tok::Name, "a predicate name");
        if (is_operator_keyword(name.text)) fail_at(name, "'" + name.text + "' is a keyword");
        if (!opts_.allow_reserved && name.text.starts_with(kAuxPrefix))
            fail_at(name, "predicate prefix '" + std::string(kAuxPrefix) + "' is reserved");
        Atom a{name.text, {}};
        if (at(Tok::LParen)) {
            advance();
            a.args.push_back(term());
            while (at(Tok::Comma)) {
                advance();
                a.args.push_back(term());
            }
            expect(Tok::RParen, "')'");
        }
        return a;
    }

    Term term() {
        const Token& t = cur();
        switch (t.kind) {
            case Tok::String: advance(); return Term::constant(t.text);
            case Tok::Number:
                if (t.unit) fail("durations cannot be used as constants");
                advance();
                return Term::constant(t.text);
            case Tok::Name: {
                advance();
                char c0 = t.text.front();
                if (c0 == '_' || std::isupper(static_cast<unsigned char>(c0))) return Term::variable(t.text);
                return Term::constant(t.text);
            }
            default: fail("expected a term" + describe_current());
        }
    }

    Fact fact() {
        const Token& start = cur();
        Atom a = atom();
        for (const auto& t : a.args)
            if (t.is_variable()) fail_at(start, "facts must be ground, found variable " + t.name);
        expect(Tok::At, "'@'");
        return Fact{to_ground(a), interval()};
    }

    /// An interval used inside an operator: must be non-negative.
    Interval temporal_interval() {
        const Token& start = cur();
        Interval rho = interval();
        if (!is_non_negative(rho)) fail_at(start, "temporal interval must be non-negative, got " + to_string(rho));
        return rho;
    }

    Interval interval() {
        const Token& start = cur();
        bool lo_open;
        if (at(Tok::LBracket)) lo_open = false;
        else if (at(Tok::LParen)) lo_open = true;
        else fail("expected '[' or '('" + describe_current());
        advance();
        TimePoint lo = endpoint();
        expect(Tok::Comma, "','");
        TimePoint hi = endpoint();
        bool hi_open;
        if (at(Tok::RBracket)) hi_open = false;
        else if (at(Tok::RParen)) hi_open = true;
        else fail("expected ']' or ')'" + describe_current());
        advance();
        auto i = Interval::make(lo, lo_open, hi, hi_open);
        if (!i) fail_at(start, "empty interval");
        return *i;
    }

    TimePoint endpoint() {
        bool negative = false;
        if (at(Tok::Minus) || at(Tok::Plus)) negative = advance().kind == Tok::Minus;
        if (at_word("inf")) {
            advance();
            return negative ? TimePoint::neg_infinity() : TimePoint::infinity();
        }
        const Token& t = expect(Tok::Number, "a number or 'inf'");
        Rational v = parse_rational(t.text);
        if (v != 0) note_unit(t);
        v *= unit_scale(t.unit);
        return TimePoint(negative ? Rational(-v) : v);
    }

    void note_unit(const Token& t) {
        bool united = t.unit != 0;
        if (!unit_mode_) unit_mode_ = united;
        else if (*unit_mode_ != united) fail_at(t, "cannot mix numbers with and without duration units");
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    ParseOptions opts_;
    std::optional<bool> unit_mode_;
};

}  // namespace detail

inline Program parse_program(std::string_view text, ParseOptions opts = {}) {
    return detail::Parser(text, opts).program();
}

inline Database parse_database(std::string_view text, ParseOptions opts = {}) {
    return detail::Parser(text, opts).database();
}

/// A single `A(c..)@<interval>` with optional trailing dot.
inline Fact parse_fact(std::string_view text, ParseOptions opts = {}) {
    return detail::Parser(text, opts).single_fact();
}

inline Rule parse_rule(std::string_view text, ParseOptions opts = {}) { return detail::Parser(text, opts).single_rule(); }

}  // namespace dmtl
