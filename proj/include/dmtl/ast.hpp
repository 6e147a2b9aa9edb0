#pragma once

// ============================================================================
// dmtl/ast.hpp — DatalogMTL abstract syntax
// ============================================================================
//
// Literals form a small tree with value semantics:
//
//   Top, Bottom               constants
//   Atom                      P(t1,...,tn), n >= 0
//   BoxMinus / BoxPlus        unary, operand in children[0], interval in range
//   DiamondMinus / ...Plus    unary, same layout
//   Since / Until             binary, children[0] S/U children[1]
//
// A rule is `body -> head`; the body is a conjunction (possibly empty).
// Temporal normal form admits only the seven rule shapes enumerated by
// RuleForm below.

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dmtl/interval.hpp"

namespace dmtl {

struct Term {
    enum class Kind { Constant, Variable };

    Kind kind = Kind::Constant;
    std::string name;

    static Term constant(std::string n) { return Term{Kind::Constant, std::move(n)}; }
    static Term variable(std::string n) { return Term{Kind::Variable, std::move(n)}; }

    bool is_variable() const noexcept { return kind == Kind::Variable; }

    friend auto operator<=>(const Term&, const Term&) = default;
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    bool is_ground() const {
        return std::none_of(args.begin(), args.end(), [](const Term& t) { return t.is_variable(); });
    }

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

class Literal {
  public:
    enum class Kind { Top, Bottom, Atom, BoxMinus, BoxPlus, DiamondMinus, DiamondPlus, Since, Until };

    static Literal top() { return Literal(Kind::Top); }
    static Literal bottom() { return Literal(Kind::Bottom); }
    static Literal atom(dmtl::Atom a) {
        Literal l(Kind::Atom);
        l.atom_ = std::move(a);
        return l;
    }
    static Literal atom(std::string predicate, std::vector<Term> args = {}) {
        return atom(dmtl::Atom{std::move(predicate), std::move(args)});
    }
    static Literal unary(Kind kind, Interval range, Literal operand) {
        Literal l(kind);
        l.range_ = std::move(range);
        l.children_.push_back(std::move(operand));
        return l;
    }
    static Literal binary(Kind kind, Literal left, Interval range, Literal right) {
        Literal l(kind);
        l.range_ = std::move(range);
        l.children_.push_back(std::move(left));
        l.children_.push_back(std::move(right));
        return l;
    }
    static Literal box_minus(Interval r, Literal l) { return unary(Kind::BoxMinus, std::move(r), std::move(l)); }
    static Literal box_plus(Interval r, Literal l) { return unary(Kind::BoxPlus, std::move(r), std::move(l)); }
    static Literal diamond_minus(Interval r, Literal l) { return unary(Kind::DiamondMinus, std::move(r), std::move(l)); }
    static Literal diamond_plus(Interval r, Literal l) { return unary(Kind::DiamondPlus, std::move(r), std::move(l)); }
    static Literal since(Literal a, Interval r, Literal b) { return binary(Kind::Since, std::move(a), std::move(r), std::move(b)); }
    static Literal until(Literal a, Interval r, Literal b) { return binary(Kind::Until, std::move(a), std::move(r), std::move(b)); }

    Kind kind() const noexcept { return kind_; }
    bool is_atom() const noexcept { return kind_ == Kind::Atom; }
    bool is_unary() const noexcept {
        return kind_ == Kind::BoxMinus || kind_ == Kind::BoxPlus || kind_ == Kind::DiamondMinus ||
               kind_ == Kind::DiamondPlus;
    }
    bool is_binary() const noexcept { return kind_ == Kind::Since || kind_ == Kind::Until; }
    bool is_temporal() const noexcept { return is_unary() || is_binary(); }

    const dmtl::Atom& as_atom() const { return atom_; }
    dmtl::Atom& as_atom() { return atom_; }
    const Interval& range() const { return *range_; }
    const std::vector<Literal>& children() const noexcept { return children_; }
    std::vector<Literal>& children() noexcept { return children_; }
    const Literal& operand() const { return children_.at(0); }

    friend bool operator==(const Literal&, const Literal&) = default;

  private:
    explicit Literal(Kind kind) : kind_(kind) {}

    Kind kind_;
    dmtl::Atom atom_;
    std::optional<Interval> range_;
    std::vector<Literal> children_;
};

/// The seven rule shapes of temporal normal form.
enum class RuleForm { Horn, Since, Until, BoxMinus, BoxPlus, DiamondMinus, DiamondPlus };

inline const char* to_string(RuleForm f) {
    switch (f) {
        case RuleForm::Horn: return "horn";
        case RuleForm::Since: return "since";
        case RuleForm::Until: return "until";
        case RuleForm::BoxMinus: return "boxminus";
        case RuleForm::BoxPlus: return "boxplus";
        case RuleForm::DiamondMinus: return "diamondminus";
        case RuleForm::DiamondPlus: return "diamondplus";
    }
    return "?";
}

struct Rule {
    std::vector<Literal> body;
    Literal head = Literal::top();
    std::string id;

    /// Ids are labels only; structural equality ignores them.
    friend bool operator==(const Rule& a, const Rule& b) { return a.body == b.body && a.head == b.head; }
};

struct Program {
    std::vector<Rule> rules;

    friend bool operator==(const Program&, const Program&) = default;
};

/// Normal-form shape of `r`, or nullopt if the rule is not in normal form.
inline std::optional<RuleForm> form_of(const Rule& r) {
    if (!r.head.is_atom()) return std::nullopt;
    if (std::all_of(r.body.begin(), r.body.end(), [](const Literal& l) { return l.is_atom(); })) return RuleForm::Horn;
    if (r.body.size() != 1) return std::nullopt;
    const Literal& l = r.body.front();
    if (!std::all_of(l.children().begin(), l.children().end(), [](const Literal& c) { return c.is_atom(); }))
        return std::nullopt;
    switch (l.kind()) {
        case Literal::Kind::BoxMinus: return RuleForm::BoxMinus;
        case Literal::Kind::BoxPlus: return RuleForm::BoxPlus;
        case Literal::Kind::DiamondMinus: return RuleForm::DiamondMinus;
        case Literal::Kind::DiamondPlus: return RuleForm::DiamondPlus;
        case Literal::Kind::Since: return RuleForm::Since;
        case Literal::Kind::Until: return RuleForm::Until;
        default: return std::nullopt;
    }
}

inline bool is_normal_form(const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(), [](const Rule& r) { return form_of(r).has_value(); });
}

inline bool is_forward_propagating_form(RuleForm f) {
    return f == RuleForm::Horn || f == RuleForm::BoxMinus || f == RuleForm::DiamondMinus;
}

/// Atoms occurring in `l`, left to right.
inline void collect_atoms(const Literal& l, std::vector<Atom>& out) {
    if (l.is_atom()) {
        out.push_back(l.as_atom());
        return;
    }
    for (const auto& c : l.children()) collect_atoms(c, out);
}

inline std::vector<Atom> body_atoms(const Rule& r) {
    std::vector<Atom> out;
    for (const auto& l : r.body) collect_atoms(l, out);
    return out;
}

inline std::vector<Atom> head_atoms(const Rule& r) {
    std::vector<Atom> out;
    collect_atoms(r.head, out);
    return out;
}

/// Variables in first-occurrence order.
inline void collect_variables(const Literal& l, std::vector<std::string>& out) {
    std::vector<Atom> atoms;
    collect_atoms(l, atoms);
    for (const auto& a : atoms)
        for (const auto& t : a.args)
            if (t.is_variable() && std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
}

inline bool is_ground(const Rule& r) {
    auto atoms = body_atoms(r);
    auto heads = head_atoms(r);
    atoms.insert(atoms.end(), heads.begin(), heads.end());
    return std::all_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.is_ground(); });
}

inline bool is_ground(const Program& p) {
    return std::all_of(p.rules.begin(), p.rules.end(), [](const Rule& r) { return is_ground(r); });
}

/// Every interval mentioned in `l`.
inline void collect_ranges(const Literal& l, std::vector<Interval>& out) {
    if (l.is_temporal()) out.push_back(l.range());
    for (const auto& c : l.children()) collect_ranges(c, out);
}

inline bool mentions_top(const Literal& l) {
    if (l.kind() == Literal::Kind::Top) return true;
    return std::any_of(l.children().begin(), l.children().end(), [](const Literal& c) { return mentions_top(c); });
}

/// Reserved prefix for predicates introduced by normalization.
inline constexpr std::string_view kAuxPrefix = "_aux";

}  // namespace dmtl
