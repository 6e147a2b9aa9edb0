#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dmtl/ast.hpp"
#include "dmtl/model.hpp"

namespace dmtl {

/// Constants mentioned by the program and the database, sorted.
inline std::vector<std::string> constants_of(const Program& p, const Database& d) {
    std::set<std::string> out;
    for (const auto& r : p.rules) {
        auto atoms = body_atoms(r);
        auto heads = head_atoms(r);
        atoms.insert(atoms.end(), heads.begin(), heads.end());
        for (const auto& a : atoms)
            for (const auto& t : a.args)
                if (!t.is_variable()) out.insert(t.name);
    }
    for (const auto& [atom, set] : d)
        for (const auto& c : atom.args) out.insert(c);
    return {out.begin(), out.end()};
}

namespace detail {

inline Literal substitute(const Literal& l, const std::map<std::string, std::string>& sigma) {
    if (l.is_atom()) {
        Atom a = l.as_atom();
        for (auto& t : a.args)
            if (t.is_variable()) t = Term::constant(sigma.at(t.name));
        return Literal::atom(std::move(a));
    }
    Literal out = l;
    for (auto& c : out.children()) c = substitute(c, sigma);
    return out;
}

}  // namespace detail

/// Every instance of every rule over the constants of `p` and `d`; ground
/// rules pass through unchanged. Instances keep the id of their rule.
inline Program ground(const Program& p, const Database& d) {
    auto constants = constants_of(p, d);
    Program out;
    for (const auto& r : p.rules) {
        std::vector<std::string> vars;
        for (const auto& l : r.body) collect_variables(l, vars);
        collect_variables(r.head, vars);
        if (vars.empty()) {
            out.rules.push_back(r);
            continue;
        }
        if (constants.empty()) continue;
        std::vector<std::size_t> choice(vars.size(), 0);
        for (;;) {
            std::map<std::string, std::string> sigma;
            for (std::size_t i = 0; i < vars.size(); ++i) sigma[vars[i]] = constants[choice[i]];
            Rule g{{}, detail::substitute(r.head, sigma), r.id};
            for (const auto& l : r.body) g.body.push_back(detail::substitute(l, sigma));
            out.rules.push_back(std::move(g));
            std::size_t k = vars.size();
            while (k > 0 && ++choice[k - 1] == constants.size()) choice[--k] = 0;
            if (k == 0) break;
        }
    }
    return out;
}

}  // namespace dmtl
