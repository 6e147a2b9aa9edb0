#pragma once

// Rewriting into temporal normal form.
//
// Every nested or non-atomic operand is replaced by a fresh `_aux<N>` atom
// defined by its own rule; the aux atom carries the variables of the literal
// it stands for. Heads are rewritten through the dual operator:
//
//   body -> boxminus[r] B    ==>   body -> Aux ;  diamondplus[r] Aux -> B
//   body -> boxplus[r] B     ==>   body -> Aux ;  diamondminus[r] Aux -> B
//
// `top since[r] B` is diamondminus[r] B (and dually for until), rules with a
// `top` head are tautologies and are dropped.

#include <charconv>
#include <string>
#include <vector>

#include "dmtl/ast.hpp"

namespace dmtl {

namespace detail {

class Normalizer {
  public:
    explicit Normalizer(const Program& p) {
        for (const auto& r : p.rules) {
            std::vector<Atom> atoms = body_atoms(r);
            auto heads = head_atoms(r);
            atoms.insert(atoms.end(), heads.begin(), heads.end());
            for (const auto& a : atoms) note_name(a.predicate);
        }
    }

    Program run(const Program& p) {
        for (const auto& r : p.rules) rule(r.body, r.head);
        for (std::size_t i = 0; i < out_.rules.size(); ++i) out_.rules[i].id = "r" + std::to_string(i);
        return std::move(out_);
    }

  private:
    void note_name(const std::string& name) {
        if (!name.starts_with(kAuxPrefix)) return;
        std::string_view digits(name);
        digits.remove_prefix(kAuxPrefix.size());
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
        if (ec == std::errc{} && ptr == digits.data() + digits.size() && v + 1 > next_) next_ = v + 1;
    }

    Atom fresh(const Literal& l) {
        std::vector<std::string> vars;
        collect_variables(l, vars);
        Atom a{std::string(kAuxPrefix) + std::to_string(next_++), {}};
        for (auto& v : vars) a.args.push_back(Term::variable(std::move(v)));
        return a;
    }

    void emit(std::vector<Literal> body, Literal head) { out_.rules.push_back(Rule{std::move(body), std::move(head), ""}); }

    static Literal simplify_top(const Literal& l) {
        if (l.is_binary() && l.children()[0].kind() == Literal::Kind::Top) {
            auto k = l.kind() == Literal::Kind::Since ? Literal::Kind::DiamondMinus : Literal::Kind::DiamondPlus;
            return Literal::unary(k, l.range(), l.children()[1]);
        }
        return l;
    }

    /// An atom equivalent to `l`, defining it with extra rules when needed.
    Atom atomize(const Literal& l) {
        if (l.is_atom()) return l.as_atom();
        Atom aux = fresh(l);
        switch (l.kind()) {
            case Literal::Kind::Top: emit({}, Literal::atom(aux)); break;
            case Literal::Kind::Bottom: break;  // never derivable
            default: emit({flatten_operands(l)}, Literal::atom(aux)); break;
        }
        return aux;
    }

    /// `l` with each operand replaced by an atom.
    Literal flatten_operands(const Literal& raw) {
        Literal l = simplify_top(raw);
        if (!l.is_temporal()) return l;
        if (l.is_unary()) return Literal::unary(l.kind(), l.range(), Literal::atom(atomize(l.operand())));
        Atom left = atomize(l.children()[0]);
        Atom right = atomize(l.children()[1]);
        return Literal::binary(l.kind(), Literal::atom(std::move(left)), l.range(), Literal::atom(std::move(right)));
    }

    void rule(const std::vector<Literal>& body, const Literal& head) {
        if (head.kind() == Literal::Kind::Top) return;
        if (head.kind() == Literal::Kind::BoxMinus || head.kind() == Literal::Kind::BoxPlus) {
            Atom aux = fresh(head.operand());
            rule(body, Literal::atom(aux));
            auto dual = head.kind() == Literal::Kind::BoxMinus ? Literal::Kind::DiamondPlus : Literal::Kind::DiamondMinus;
            rule({Literal::unary(dual, head.range(), Literal::atom(std::move(aux)))}, head.operand());
            return;
        }
        if (body.size() == 1 && body.front().is_temporal()) {
            emit({flatten_operands(body.front())}, head);
            return;
        }
        std::vector<Literal> atoms;
        for (const auto& l : body) atoms.push_back(Literal::atom(atomize(l)));
        emit(std::move(atoms), head);
    }

    Program out_;
    std::size_t next_ = 0;
};

}  // namespace detail

/// Equivalent program (on the original predicates) using only the seven
/// normal-form rule shapes. Idempotent.
inline Program to_normal_form(const Program& p) {
    if (is_normal_form(p)) return p;
    return detail::Normalizer(p).run(p);
}

}  // namespace dmtl
