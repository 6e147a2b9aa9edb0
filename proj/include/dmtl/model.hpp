#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmtl/ast.hpp"
#include "dmtl/interval_set.hpp"

namespace dmtl {

struct GroundAtom {
    std::string predicate;
    std::vector<std::string> args;

    friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

inline GroundAtom to_ground(const Atom& a) {
    GroundAtom g{a.predicate, {}};
    for (const auto& t : a.args) {
        if (t.is_variable()) throw InputError("atom '" + a.predicate + "' is not ground");
        g.args.push_back(t.name);
    }
    return g;
}

inline Atom to_atom(const GroundAtom& g) {
    Atom a{g.predicate, {}};
    for (const auto& c : g.args) a.args.push_back(Term::constant(c));
    return a;
}

/// True when `name` prints as a bare constant (lowercase identifier or number).
inline bool is_plain_constant(const std::string& name) {
    if (name.empty()) return false;
    char c0 = name.front();
    bool ident = (c0 >= 'a' && c0 <= 'z');
    bool number = (c0 >= '0' && c0 <= '9');
    if (!ident && !number) return false;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    if (number)
        for (char c : name)
            if (c < '0' || c > '9') return false;
    return true;
}

inline std::string quote_constant(const std::string& name) {
    if (is_plain_constant(name)) return name;
    std::string out = "\"";
    for (char c : name) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out + "\"";
}

inline std::string to_string(const GroundAtom& g) {
    if (g.args.empty()) return g.predicate;
    std::string out = g.predicate + "(";
    for (std::size_t i = 0; i < g.args.size(); ++i) {
        if (i) out += ",";
        out += quote_constant(g.args[i]);
    }
    return out + ")";
}

struct Fact {
    GroundAtom atom;
    Interval interval;

    friend bool operator==(const Fact&, const Fact&) = default;
};

inline std::string to_string(const Fact& f) { return to_string(f.atom) + "@" + to_string(f.interval); }

/// Ground atom -> canonical set of time points where it holds. Atoms with an
/// empty set are never stored.
class Model {
    using Storage = std::map<GroundAtom, IntervalSet>;

  public:
    using const_iterator = Storage::const_iterator;

    bool add(const GroundAtom& atom, const Interval& i) { return facts_[atom].insert(i); }
    bool add(const Fact& f) { return add(f.atom, f.interval); }
    bool add(const GroundAtom& atom, const IntervalSet& s) {
        if (s.empty()) return false;
        return facts_[atom].insert(s);
    }
    bool add(const Model& other) {
        bool grew = false;
        for (const auto& [atom, set] : other) grew = add(atom, set) || grew;
        return grew;
    }

    /// Empty set for unknown atoms.
    const IntervalSet& at(const GroundAtom& atom) const {
        static const IntervalSet kEmpty;
        auto it = facts_.find(atom);
        return it == facts_.end() ? kEmpty : it->second;
    }
    bool contains(const GroundAtom& atom) const { return facts_.count(atom) != 0; }

    bool empty() const noexcept { return facts_.empty(); }
    std::size_t size() const noexcept { return facts_.size(); }
    const_iterator begin() const noexcept { return facts_.begin(); }
    const_iterator end() const noexcept { return facts_.end(); }

    std::vector<Fact> facts() const {
        std::vector<Fact> out;
        for (const auto& [atom, set] : facts_)
            for (const auto& i : set) out.push_back(Fact{atom, i});
        return out;
    }

    Model clipped(const Interval& window) const {
        Model out;
        for (const auto& [atom, set] : facts_) {
            auto cut = set.intersect(window);
            if (!cut.empty()) out.facts_.emplace(atom, std::move(cut));
        }
        return out;
    }

    Model shifted(const Rational& d) const {
        Model out;
        for (const auto& [atom, set] : facts_) out.facts_.emplace(atom, set.shifted(d));
        return out;
    }

    template <typename Pred>
    Model filtered(Pred keep) const {
        Model out;
        for (const auto& [atom, set] : facts_)
            if (keep(atom)) out.facts_.emplace(atom, set);
        return out;
    }

    friend bool operator==(const Model&, const Model&) = default;

  private:
    Storage facts_;
};

using Database = Model;

/// Smallest / largest finite endpoint of any fact; nullopt if there is none.
inline std::optional<Rational> min_time_point(const Model& m) {
    std::optional<Rational> best;
    for (const auto& [atom, set] : m)
        for (const auto& i : set)
            for (const auto* t : {&i.lo(), &i.hi()})
                if (t->is_finite() && (!best || t->value() < *best)) best = t->value();
    return best;
}

inline std::optional<Rational> max_time_point(const Model& m) {
    std::optional<Rational> best;
    for (const auto& [atom, set] : m)
        for (const auto& i : set)
            for (const auto* t : {&i.lo(), &i.hi()})
                if (t->is_finite() && (!best || t->value() > *best)) best = t->value();
    return best;
}

inline std::string to_string(const Model& m) {
    std::string out;
    for (const auto& [atom, set] : m) out += to_string(atom) + " " + to_string(set) + "\n";
    return out;
}

}  // namespace dmtl
