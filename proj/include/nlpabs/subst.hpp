// Substitutions in idempotent solved form.
//
// A substitution maps finitely many variables to terms. Application is
// simultaneous (each variable replaced once); for a solved-form substitution
// (no bound variable occurs in any right-hand side, no identity bindings)
// this makes application idempotent. All substitutions produced by the
// unification layer are in solved form; compose() keeps solved form whenever
// the second argument binds no variable occurring in the first argument's
// right-hand sides, which holds for every composition the analysis performs.

#pragma once

#include "nlpabs/term.hpp"

#include <map>
#include <string>

namespace nlpabs {

using Substitution = std::map<VarName, TermPtr>;

TermPtr apply_subst(const Substitution& s, const TermPtr& t);
Atom apply_subst(const Substitution& s, const Atom& a);

// Standard composition: apply_subst(compose(t, s), e) == apply_subst(s, apply_subst(t, e)).
// Identity bindings are dropped so dom() stays exact.
Substitution compose(const Substitution& t, const Substitution& s);

// Restriction to V: keep only bindings of variables in V.
Substitution restrict_to(const Substitution& s, const VarSet& v);

VarSet dom(const Substitution& s);
VarSet range_vars(const Substitution& s);

// Solved form: no identity bindings and no bound variable in any rhs.
bool is_solved(const Substitution& s);

// A renaming: injective, maps variables to variables.
bool is_renaming(const Substitution& s);

// Rendered as "{X/t, Y/s}" with bindings ordered by variable name.
std::string render_subst(const Substitution& s);

} // namespace nlpabs
