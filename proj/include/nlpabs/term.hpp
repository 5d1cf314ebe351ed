// First-order terms, atoms and literals.
//
// Terms are immutable and shared. A variable is identified by its name;
// variable names form a single global namespace with the usual string
// ordering, which every canonicalization and rendering step relies on.
// Constants are functors of arity 0. Lists are ordinary terms built from
// '.'/2 and '[]'/0; the renderer restores the bracket sugar.

#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace nlpabs {

using VarName = std::string;
using VarSet = std::set<VarName>;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { Var, Fun };

    Kind kind;
    std::string name;          // variable name, or functor symbol
    std::vector<TermPtr> args; // empty for variables and constants
};

TermPtr mk_var(std::string name);
TermPtr mk_fun(std::string functor, std::vector<TermPtr> args = {});

// Cons cells for list sugar.
inline const char* list_cons_functor() { return "."; }
inline const char* list_nil_functor() { return "[]"; }
TermPtr mk_nil();
TermPtr mk_cons(TermPtr head, TermPtr tail);

bool term_eq(const TermPtr& a, const TermPtr& b);
bool is_ground(const TermPtr& t);
bool occurs(const VarName& v, const TermPtr& t);

// Variables in depth-first, left-to-right first-occurrence order (no duplicates).
std::vector<VarName> vars_of(const TermPtr& t);
void collect_vars(const TermPtr& t, std::vector<VarName>& out, VarSet& seen);
VarSet var_set_of(const TermPtr& t);

std::string render_term(const TermPtr& t);

struct Atom {
    std::string pred;
    std::vector<TermPtr> args;

    std::size_t arity() const { return args.size(); }
};

struct Literal {
    bool positive = true;
    Atom atom;
};

bool atom_eq(const Atom& a, const Atom& b);
std::vector<VarName> vars_of(const Atom& a);
VarSet var_set_of(const Atom& a);
std::string render_atom(const Atom& a);
std::string render_literal(const Literal& l);

// Reserved variable namespaces: "_G<n>" (fresh variables drawn during
// renaming) and "_A<n>" (parser-generated anonymous variables). User
// programs may not declare variables with these exact shapes.
bool is_generated_var(const VarName& v); // _G<n>
bool is_anonymous_var(const VarName& v); // _A<n>
bool is_reserved_var(const VarName& v);

// Source of globally fresh variables. Passed explicitly wherever renaming
// happens so concurrent pipelines cannot race on shared state.
struct FreshVarGen {
    std::size_t next = 0;

    VarName fresh() { return "_G" + std::to_string(next++); }
};

} // namespace nlpabs
