// Shared helpers for the test binaries: seeded randomness, random term and
// substitution generators, randomized checks of the renaming/composition
// laws the engine relies on, a full-sweep fixpoint solver used as an oracle
// for the worklist solver, and a runner for the installed CLI binary.
#pragma once

#include "nlpabs/conformance.hpp"
#include "nlpabs/equations.hpp"
#include "nlpabs/unify.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nlpabs::testsupport {

// NLPABS_SEED from the environment, or a fixed default.
std::uint64_t test_seed();

std::string corpus_path(const std::string& name);
std::string read_file(const std::string& path);

// Uniform pick in [0, n).
std::size_t pick(Rng& rng, std::size_t n);

TermPtr random_term(Rng& rng, const std::vector<VarName>& vars,
                    std::size_t depth);
Atom random_atom(Rng& rng, const std::vector<VarName>& vars,
                 std::size_t depth);
// A random binding of a subset of `vars` to terms over `rhs_vars`.
Substitution random_subst(Rng& rng, const std::vector<VarName>& vars,
                          const std::vector<VarName>& rhs_vars,
                          std::size_t depth);

// Equality of substitutions as binding sets: same domain, equal terms.
bool subst_exact_eq(const Substitution& a, const Substitution& b);

// Randomized law checks. Each runs `trials` rounds and returns an empty
// string, or a description of the first counterexample found.
//
// Renaming invariance: for renamings r1, r2 with equal domains covering
// vars(B) and ranges clear of vars(A), (a) unifiability of (A, B r1) and
// (A, B r2) agree; (b) the mgus agree on vars(A) up to renaming; (c) the
// compositions r_i with the mgus agree on dom(r_i) up to renaming.
std::string check_renaming_invariance(std::size_t trials, Rng& rng);
// For variable-disjoint A, B and a renaming r of vars(B) to fresh names:
// unifiability of (A, B) and (A, B r) agree, and mgu(A,B) restricted to
// vars(B) equals (r composed with mgu(A, B r)) restricted to vars(B), up to
// renaming.
std::string check_renaming_collapse(std::size_t trials, Rng& rng);
// restrict(compose(t1, t2), V) == restrict(compose(restrict(t1, V), t2), V)
// as binding sets, for arbitrary substitutions.
std::string check_composition_restriction(std::size_t trials, Rng& rng);
// For t1 = mgu(E1) and t2 = mgu(E2 t1): compose(t1, t2) is a variant of
// mgu(E1 union E2), and failure of either stage matches failure of the
// union.
std::string check_staged_mgu(std::size_t trials, Rng& rng);
// mgu(a, b) unifies its inputs, is in solved form, and is most general:
// every independently known unifier factors through it.
std::string check_mgu_contract(std::size_t trials, Rng& rng);

// Repeated full sweeps until stable; oracle for the worklist solver.
std::vector<ValuePtr> jacobi_solve(const EquationSystem& sys,
                                   const AbstractDomain& dom);

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout and stderr interleaved
};

// Runs the CLI binary with the given argument string.
CliResult run_cli(const std::string& args);

} // namespace nlpabs::testsupport
