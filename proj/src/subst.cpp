#include "nlpabs/subst.hpp"

#include <sstream>

namespace nlpabs {

TermPtr apply_subst(const Substitution& s, const TermPtr& t) {
    if (t->kind == Term::Kind::Var) {
        auto it = s.find(t->name);
        return it == s.end() ? t : it->second;
    }
    if (t->args.empty()) return t;
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    bool changed = false;
    for (const auto& a : t->args) {
        TermPtr b = apply_subst(s, a);
        changed = changed || b.get() != a.get();
        args.push_back(std::move(b));
    }
    if (!changed) return t;
    return mk_fun(t->name, std::move(args));
}

Atom apply_subst(const Substitution& s, const Atom& a) {
    Atom out;
    out.pred = a.pred;
    out.args.reserve(a.args.size());
    for (const auto& t : a.args) out.args.push_back(apply_subst(s, t));
    return out;
}

Substitution compose(const Substitution& t, const Substitution& s) {
    Substitution out;
    for (const auto& [x, term] : t) {
        TermPtr mapped = apply_subst(s, term);
        if (mapped->kind == Term::Kind::Var && mapped->name == x) continue;
        out.emplace(x, std::move(mapped));
    }
    for (const auto& [y, term] : s) {
        if (t.count(y)) continue;
        if (term->kind == Term::Kind::Var && term->name == y) continue;
        out.emplace(y, term);
    }
    return out;
}

Substitution restrict_to(const Substitution& s, const VarSet& v) {
    Substitution out;
    for (const auto& [x, term] : s) {
        if (v.count(x)) out.emplace(x, term);
    }
    return out;
}

VarSet dom(const Substitution& s) {
    VarSet out;
    for (const auto& [x, term] : s) out.insert(x);
    return out;
}

VarSet range_vars(const Substitution& s) {
    VarSet out;
    for (const auto& [x, term] : s) {
        VarSet vs = var_set_of(term);
        out.insert(vs.begin(), vs.end());
    }
    return out;
}

bool is_solved(const Substitution& s) {
    for (const auto& [x, term] : s) {
        if (term->kind == Term::Kind::Var && term->name == x) return false;
    }
    VarSet rng = range_vars(s);
    for (const auto& [x, term] : s) {
        if (rng.count(x)) return false;
    }
    return true;
}

bool is_renaming(const Substitution& s) {
    VarSet seen;
    for (const auto& [x, term] : s) {
        if (term->kind != Term::Kind::Var) return false;
        if (!seen.insert(term->name).second) return false;
    }
    return true;
}

std::string render_subst(const Substitution& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [x, term] : s) {
        if (!first) os << ", ";
        first = false;
        os << x << '/' << render_term(term);
    }
    os << '}';
    return os.str();
}

} // namespace nlpabs
