#pragma once

// Printing in the same concrete syntax the parser accepts, so that
// parse_program(print(p)) == p. Binary operators and nested operands are
// parenthesised whenever needed.

#include <string>

#include "dmtl/ast.hpp"
#include "dmtl/model.hpp"

namespace dmtl {

inline std::string to_string(const Term& t) { return t.is_variable() ? t.name : quote_constant(t.name); }

inline std::string to_string(const Atom& a) {
    if (a.args.empty()) return a.predicate;
    std::string out = a.predicate + "(";
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (i) out += ",";
        out += to_string(a.args[i]);
    }
    return out + ")";
}

inline const char* keyword(Literal::Kind k) {
    switch (k) {
        case Literal::Kind::Top: return "top";
        case Literal::Kind::Bottom: return "bottom";
        case Literal::Kind::BoxMinus: return "boxminus";
        case Literal::Kind::BoxPlus: return "boxplus";
        case Literal::Kind::DiamondMinus: return "diamondminus";
        case Literal::Kind::DiamondPlus: return "diamondplus";
        case Literal::Kind::Since: return "since";
        case Literal::Kind::Until: return "until";
        case Literal::Kind::Atom: return "";
    }
    return "";
}

inline std::string to_string(const Literal& l);

namespace detail {
// Operand of a unary operator or the right side of since/until: binary
// literals need parentheses there.
inline std::string operand_string(const Literal& l) {
    return l.is_binary() ? "(" + to_string(l) + ")" : to_string(l);
}
}  // namespace detail

inline std::string to_string(const Literal& l) {
    switch (l.kind()) {
        case Literal::Kind::Top:
        case Literal::Kind::Bottom: return keyword(l.kind());
        case Literal::Kind::Atom: return to_string(l.as_atom());
        case Literal::Kind::Since:
        case Literal::Kind::Until:
            // left-associative: a binary left operand needs no parentheses
            return to_string(l.children()[0]) + " " + keyword(l.kind()) + to_string(l.range()) + " " +
                   detail::operand_string(l.children()[1]);
        default: return std::string(keyword(l.kind())) + to_string(l.range()) + " " + detail::operand_string(l.operand());
    }
}

inline std::string to_string(const Rule& r) {
    std::string out;
    for (std::size_t i = 0; i < r.body.size(); ++i) {
        if (i) out += ", ";
        out += to_string(r.body[i]);
    }
    out += r.body.empty() ? "-> " : " -> ";
    return out + to_string(r.head) + " .";
}

inline std::string to_string(const Program& p) {
    std::string out;
    for (const auto& r : p.rules) out += to_string(r) + "\n";
    return out;
}

/// One `A(..)@<interval> .` line per maximal interval.
inline std::string database_to_string(const Database& db) {
    std::string out;
    for (const auto& f : db.facts()) out += to_string(f) + " .\n";
    return out;
}

}  // namespace dmtl
