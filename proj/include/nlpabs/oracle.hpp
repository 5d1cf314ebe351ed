// Bounded concrete executor over the program graph.
//
// A state is a stack of items, top first; an item pairs a graph edge with a
// substitution over the variables of the edge destination's unit. Execution
// starts from caller-supplied sample substitutions at the goal entries and
// steps:
//   - at a positive body literal, push a call item for every matching
//     clause (entry unification may fail and drops that branch);
//   - at a negated body literal, spawn a fresh singleton state for every
//     matching clause of the negated atom, and independently step across
//     the literal with the bindings unchanged (negation is treated as
//     possibly succeeding, so the search over-approximates);
//   - at a clause exit with a caller below, pop both items and push the
//     return item, unifying the instantiated head with the instantiated
//     call;
//   - a singleton at a goal exit is a final state (an answer); a singleton
//     at a clause exit is dead (a spawned negation check that completed).
// The search is breadth-first with states deduplicated up to renaming of
// generated variables, bounded by depth and state-count caps.
#pragma once

#include "nlpabs/equations.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace nlpabs {

struct StackItem {
    std::size_t edge; // index into the graph's edge list
    Substitution theta;
};

using StackState = std::vector<StackItem>; // front is the top of the stack

enum class StateKind { Running, Final, Dead };

StateKind classify(const PointedProgram& prog, const ProgramGraph& graph,
                   const StackState& s);

// Deduplication key: the state with generated variables renamed canonically.
std::string state_key(const StackState& s);

// Samples per goal unit, as parsed from a samples file.
using SampleMap = std::map<std::size_t, std::vector<Substitution>>;

// One singleton state per sample, on the goal's start edge. Throws
// std::invalid_argument if a sample lies outside the goal's annotation.
std::vector<StackState> initial_states(const PointedProgram& prog,
                                       const ProgramGraph& graph,
                                       const AbstractDomain& dom,
                                       const QueryValues& theta,
                                       const SampleMap& samples);

// Successor states in deterministic order: calls by ascending edge index,
// then the return step, then the negation step.
std::vector<StackState> successors(const PointedProgram& prog,
                                   const ProgramGraph& graph,
                                   const StackState& s, FreshVarGen& gen);

struct ReachOptions {
    std::size_t depth_cap = 64;     // states this many steps out are not expanded
    std::size_t state_cap = 100000; // maximum states kept
};

struct ReachResult {
    std::vector<StackState> states; // discovery order; initial states first
    std::vector<std::size_t> depth; // step count per state
    std::vector<std::size_t> finals;
    std::size_t dead = 0;
    bool truncated = false; // some state was provably not visited
};

ReachResult reachable(const PointedProgram& prog, const ProgramGraph& graph,
                      const std::vector<StackState>& initial,
                      const ReachOptions& opts, FreshVarGen& gen);

// Every item substitution observed per edge, canonicalized and deduplicated,
// in first-observation order.
std::map<std::size_t, std::vector<Substitution>>
project_edges(const ReachResult& reach);

// Final answers: the top substitutions of final states, canonicalized and
// deduplicated, in discovery order.
std::vector<Substitution> answers(const ReachResult& reach);

struct Violation {
    std::string index; // equation index name the value was read from
    std::string edge;  // edge the offending item sat on
    std::string theta; // rendered substitution
    std::string value; // rendered abstract value that fails to cover it
};

// Items whose substitution is not covered by the solved value at their edge
// (edge-indexed system) or at their edge's destination (point-indexed).
std::vector<Violation> soundness_violations(const EquationSystem& sys,
                                            const AbstractDomain& dom,
                                            const std::vector<ValuePtr>& x,
                                            const ProgramGraph& graph,
                                            const ReachResult& reach);

} // namespace nlpabs
