#include "nlpabs/unify.hpp"

#include <deque>
#include <map>

namespace nlpabs {

namespace {

// Extend s with v := t. Both v and t are already fully instantiated under s,
// so the composition stays in solved form.
void bind(Substitution& s, const VarName& v, const TermPtr& t) {
    Substitution unit;
    unit.emplace(v, t);
    s = compose(s, unit);
}

} // namespace

std::optional<Substitution> mgu(const EquationList& eqs) {
    Substitution s;
    std::deque<Equation> work(eqs.begin(), eqs.end());
    while (!work.empty()) {
        TermPtr a = apply_subst(s, work.front().first);
        TermPtr b = apply_subst(s, work.front().second);
        work.pop_front();
        const bool a_var = a->kind == Term::Kind::Var;
        const bool b_var = b->kind == Term::Kind::Var;
        if (a_var && b_var) {
            if (a->name == b->name) continue;
            bind(s, b->name, a);
        } else if (a_var) {
            if (occurs(a->name, b)) return std::nullopt;
            bind(s, a->name, b);
        } else if (b_var) {
            if (occurs(b->name, a)) return std::nullopt;
            bind(s, b->name, a);
        } else {
            if (a->name != b->name || a->args.size() != b->args.size()) {
                return std::nullopt;
            }
            for (std::size_t i = 0; i < a->args.size(); ++i) {
                work.emplace_back(a->args[i], b->args[i]);
            }
        }
    }
    return s;
}

std::optional<Substitution> mgu(const TermPtr& a, const TermPtr& b) {
    return mgu(EquationList{{a, b}});
}

std::optional<Substitution> mgu(const Atom& a, const Atom& b) {
    if (a.pred != b.pred || a.args.size() != b.args.size()) return std::nullopt;
    EquationList eqs;
    eqs.reserve(a.args.size());
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        eqs.emplace_back(a.args[i], b.args[i]);
    }
    return mgu(eqs);
}

namespace {

Substitution renaming_for(const std::vector<VarName>& vars, FreshVarGen& gen) {
    Substitution rho;
    for (const auto& v : vars) rho.emplace(v, mk_var(gen.fresh()));
    return rho;
}

} // namespace

std::pair<TermPtr, Substitution> rename_apart(const TermPtr& t, FreshVarGen& gen) {
    Substitution rho = renaming_for(vars_of(t), gen);
    return {apply_subst(rho, t), rho};
}

std::pair<Atom, Substitution> rename_apart(const Atom& a, FreshVarGen& gen) {
    Substitution rho = renaming_for(vars_of(a), gen);
    return {apply_subst(rho, a), rho};
}

std::optional<Substitution> unify_open(const Atom& a, const Substitution& theta,
                                       const Atom& b, const Substitution& omega,
                                       FreshVarGen& gen) {
    Atom a_inst = apply_subst(theta, a);
    Atom a_ren = rename_apart(a_inst, gen).first;
    Atom b_inst = apply_subst(omega, b);
    std::optional<Substitution> m = mgu(a_ren, b_inst);
    if (!m) return std::nullopt;
    return compose(omega, *m);
}

namespace {

struct CanonicalMap {
    std::map<VarName, VarName> names;

    const VarName& get(const VarName& v) {
        auto it = names.find(v);
        if (it == names.end()) {
            it = names.emplace(v, "v" + std::to_string(names.size())).first;
        }
        return it->second;
    }
};

TermPtr canonicalize_rec(const TermPtr& t, CanonicalMap& cm) {
    if (t->kind == Term::Kind::Var) return mk_var(cm.get(t->name));
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    for (const auto& s : t->args) args.push_back(canonicalize_rec(s, cm));
    return mk_fun(t->name, std::move(args));
}

} // namespace

TermPtr canonicalize(const TermPtr& t) {
    CanonicalMap cm;
    return canonicalize_rec(t, cm);
}

Atom canonicalize(const Atom& a) {
    CanonicalMap cm;
    Atom out;
    out.pred = a.pred;
    out.args.reserve(a.args.size());
    for (const auto& t : a.args) out.args.push_back(canonicalize_rec(t, cm));
    return out;
}

bool variant_eq(const TermPtr& a, const TermPtr& b) {
    return term_eq(canonicalize(a), canonicalize(b));
}

bool variant_eq(const Atom& a, const Atom& b) {
    return atom_eq(canonicalize(a), canonicalize(b));
}

namespace {

// Renames generated variables only; everything else passes through.
TermPtr renumber_generated(const TermPtr& t, CanonicalMap& cm) {
    if (t->kind == Term::Kind::Var) {
        return is_generated_var(t->name) ? mk_var(cm.get(t->name)) : t;
    }
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    bool changed = false;
    for (const auto& s : t->args) {
        TermPtr r = renumber_generated(s, cm);
        changed = changed || r.get() != s.get();
        args.push_back(std::move(r));
    }
    if (!changed) return t;
    return mk_fun(t->name, std::move(args));
}

} // namespace

Substitution canonical_substitution(const Substitution& s) {
    CanonicalMap cm;
    Substitution out;
    for (const auto& [x, term] : s) {
        VarName key = is_generated_var(x) ? cm.get(x) : x;
        out.emplace(std::move(key), renumber_generated(term, cm));
    }
    return out;
}

bool match_onto(const TermPtr& pattern, const TermPtr& target, Substitution& out) {
    if (pattern->kind == Term::Kind::Var) {
        auto it = out.find(pattern->name);
        if (it != out.end()) return term_eq(it->second, target);
        out.emplace(pattern->name, target);
        return true;
    }
    if (target->kind == Term::Kind::Var) return false;
    if (pattern->name != target->name ||
        pattern->args.size() != target->args.size()) {
        return false;
    }
    for (std::size_t i = 0; i < pattern->args.size(); ++i) {
        if (!match_onto(pattern->args[i], target->args[i], out)) return false;
    }
    return true;
}

namespace {

// Matching restricted to an injective variable-to-variable map.
bool match_renaming(const std::vector<TermPtr>& from,
                    const std::vector<TermPtr>& to) {
    Substitution delta;
    for (std::size_t i = 0; i < from.size(); ++i) {
        if (!match_onto(from[i], to[i], delta)) return false;
    }
    return is_renaming(delta);
}

} // namespace

bool subst_variant_eq(const Substitution& a, const Substitution& b) {
    VarSet w = dom(a);
    VarSet db = dom(b);
    w.insert(db.begin(), db.end());
    std::vector<TermPtr> ta;
    std::vector<TermPtr> tb;
    ta.reserve(w.size());
    tb.reserve(w.size());
    for (const auto& x : w) {
        TermPtr v = mk_var(x);
        ta.push_back(apply_subst(a, v));
        tb.push_back(apply_subst(b, v));
    }
    return match_renaming(ta, tb) && match_renaming(tb, ta);
}

} // namespace nlpabs
