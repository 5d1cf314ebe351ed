// Unification, renaming and canonical forms.
//
// mgu() runs Robinson unification with the occur check, processing the
// equation list left to right and eagerly propagating bindings, so its
// output is deterministic and always in solved form. Orientation rule:
// when exactly one side of an equation is a variable, that variable is
// bound; when both sides are variables, the right one is bound to the left.
// Failure is an in-band empty optional, never an exception.

#pragma once

#include "nlpabs/subst.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nlpabs {

using Equation = std::pair<TermPtr, TermPtr>;
using EquationList = std::vector<Equation>;

std::optional<Substitution> mgu(const EquationList& eqs);
std::optional<Substitution> mgu(const TermPtr& a, const TermPtr& b);
// Atoms unify only when predicate symbol and arity agree.
std::optional<Substitution> mgu(const Atom& a, const Atom& b);

// Rename every variable of the expression to a globally fresh one.
// Returns the renamed expression and the renaming itself.
std::pair<TermPtr, Substitution> rename_apart(const TermPtr& t, FreshVarGen& gen);
std::pair<Atom, Substitution> rename_apart(const Atom& a, FreshVarGen& gen);

// Open-world unification of an instantiated call with a (fresh) callee atom:
// rename apart A under theta, unify with B under omega, and extend omega
// with the resulting mgu. The restriction of the result to vars(B) does not
// depend on the fresh names chosen.
std::optional<Substitution> unify_open(const Atom& a, const Substitution& theta,
                                       const Atom& b, const Substitution& omega,
                                       FreshVarGen& gen);

// Canonical form: variables renamed to v0, v1, ... in first-occurrence
// order. Two expressions are variants iff their canonical forms are equal.
TermPtr canonicalize(const TermPtr& t);
Atom canonicalize(const Atom& a);
bool variant_eq(const TermPtr& a, const TermPtr& b);
bool variant_eq(const Atom& a, const Atom& b);

// Canonical form of a substitution: bindings kept keyed by their original
// variables, but generated (_G<n>) variables occurring anywhere in it are
// renumbered to v0, v1, ... in first-occurrence order over the bindings
// sorted by domain variable. Named variables keep their identity because
// sharing with them is observable.
Substitution canonical_substitution(const Substitution& s);

// One-sided matching: a substitution binding pattern variables such that
// apply_subst(result, pattern) equals target, if one exists.
bool match_onto(const TermPtr& pattern, const TermPtr& target, Substitution& out);

// Equivalence of substitutions modulo renaming: each is the other composed
// with a renaming. Decided by two-sided variable matching over the tuple of
// images of dom(a) and dom(b).
bool subst_variant_eq(const Substitution& a, const Substitution& b);

} // namespace nlpabs
