#include "nlpabs/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nlpabs {

TermPtr mk_var(std::string name) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Var;
    t->name = std::move(name);
    return t;
}

TermPtr mk_fun(std::string functor, std::vector<TermPtr> args) {
    auto t = std::make_shared<Term>();
    t->kind = Term::Kind::Fun;
    t->name = std::move(functor);
    t->args = std::move(args);
    return t;
}

TermPtr mk_nil() { return mk_fun(list_nil_functor()); }

TermPtr mk_cons(TermPtr head, TermPtr tail) {
    return mk_fun(list_cons_functor(), {std::move(head), std::move(tail)});
}

bool term_eq(const TermPtr& a, const TermPtr& b) {
    if (a.get() == b.get()) return true;
    if (a->kind != b->kind || a->name != b->name) return false;
    if (a->args.size() != b->args.size()) return false;
    for (std::size_t i = 0; i < a->args.size(); ++i) {
        if (!term_eq(a->args[i], b->args[i])) return false;
    }
    return true;
}

bool is_ground(const TermPtr& t) {
    if (t->kind == Term::Kind::Var) return false;
    return std::all_of(t->args.begin(), t->args.end(),
                       [](const TermPtr& s) { return is_ground(s); });
}

bool occurs(const VarName& v, const TermPtr& t) {
    if (t->kind == Term::Kind::Var) return t->name == v;
    return std::any_of(t->args.begin(), t->args.end(),
                       [&](const TermPtr& s) { return occurs(v, s); });
}

void collect_vars(const TermPtr& t, std::vector<VarName>& out, VarSet& seen) {
    if (t->kind == Term::Kind::Var) {
        if (seen.insert(t->name).second) out.push_back(t->name);
        return;
    }
    for (const auto& s : t->args) collect_vars(s, out, seen);
}

std::vector<VarName> vars_of(const TermPtr& t) {
    std::vector<VarName> out;
    VarSet seen;
    collect_vars(t, out, seen);
    return out;
}

VarSet var_set_of(const TermPtr& t) {
    std::vector<VarName> out;
    VarSet seen;
    collect_vars(t, out, seen);
    return seen;
}

namespace {

bool is_cons(const Term& t) {
    return t.kind == Term::Kind::Fun && t.name == list_cons_functor() &&
           t.args.size() == 2;
}

bool is_nil(const Term& t) {
    return t.kind == Term::Kind::Fun && t.name == list_nil_functor() &&
           t.args.empty();
}

void render_term_rec(const TermPtr& t, std::ostringstream& os) {
    if (t->kind == Term::Kind::Var) {
        os << t->name;
        return;
    }
    if (is_nil(*t)) {
        os << "[]";
        return;
    }
    if (is_cons(*t)) {
        os << '[';
        render_term_rec(t->args[0], os);
        TermPtr tail = t->args[1];
        while (is_cons(*tail)) {
            os << ',';
            render_term_rec(tail->args[0], os);
            tail = tail->args[1];
        }
        if (!is_nil(*tail)) {
            os << '|';
            render_term_rec(tail, os);
        }
        os << ']';
        return;
    }
    os << t->name;
    if (!t->args.empty()) {
        os << '(';
        for (std::size_t i = 0; i < t->args.size(); ++i) {
            if (i) os << ',';
            render_term_rec(t->args[i], os);
        }
        os << ')';
    }
}

} // namespace

std::string render_term(const TermPtr& t) {
    std::ostringstream os;
    render_term_rec(t, os);
    return os.str();
}

bool atom_eq(const Atom& a, const Atom& b) {
    if (a.pred != b.pred || a.args.size() != b.args.size()) return false;
    for (std::size_t i = 0; i < a.args.size(); ++i) {
        if (!term_eq(a.args[i], b.args[i])) return false;
    }
    return true;
}

std::vector<VarName> vars_of(const Atom& a) {
    std::vector<VarName> out;
    VarSet seen;
    for (const auto& t : a.args) collect_vars(t, out, seen);
    return out;
}

VarSet var_set_of(const Atom& a) {
    std::vector<VarName> out;
    VarSet seen;
    for (const auto& t : a.args) collect_vars(t, out, seen);
    return seen;
}

std::string render_atom(const Atom& a) {
    std::ostringstream os;
    os << a.pred;
    if (!a.args.empty()) {
        os << '(';
        for (std::size_t i = 0; i < a.args.size(); ++i) {
            if (i) os << ',';
            render_term_rec(a.args[i], os);
        }
        os << ')';
    }
    return os.str();
}

std::string render_literal(const Literal& l) {
    return l.positive ? render_atom(l.atom) : "\\+ " + render_atom(l.atom);
}

namespace {

bool has_numeric_suffix(const VarName& v, std::size_t prefix_len) {
    if (v.size() <= prefix_len) return false;
    return std::all_of(v.begin() + static_cast<std::ptrdiff_t>(prefix_len),
                       v.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

bool is_generated_var(const VarName& v) {
    return v.rfind("_G", 0) == 0 && has_numeric_suffix(v, 2);
}

bool is_anonymous_var(const VarName& v) {
    return v.rfind("_A", 0) == 0 && has_numeric_suffix(v, 2);
}

bool is_reserved_var(const VarName& v) {
    return is_generated_var(v) || is_anonymous_var(v);
}

} // namespace nlpabs
