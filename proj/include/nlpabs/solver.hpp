// Least-fixpoint computation for a monotone equation system.
//
// Chaotic iteration from bottom with a worklist. Every index starts queued;
// popping an index re-evaluates its equation, and a strict increase requeues
// its readers. Because iteration starts at bottom and the system is monotone,
// each re-evaluation may only move a value up its lattice; the solver checks
// this and also bounds the total number of strict updates by the sum of the
// lattice heights, so a non-monotone or ill-founded domain is reported
// instead of looping forever.
#pragma once

#include "nlpabs/equations.hpp"

#include <cstddef>
#include <vector>

namespace nlpabs {

enum class WorklistMode {
    Ordered, // always pop the smallest queued index
    Fifo,
    Lifo,
};

struct SolveStats {
    std::size_t evaluations = 0; // equations popped and re-evaluated
    std::size_t updates = 0;     // evaluations that strictly increased
    std::size_t unify_ops = 0;   // abstract unifications performed
    std::vector<std::size_t> updates_per_index;
};

// The least solution of the system. Throws std::logic_error if a
// re-evaluation ever decreases a value or the update budget implied by the
// lattice heights is exhausted (both mean the domain broke its contract).
std::vector<ValuePtr> solve(const EquationSystem& sys, const AbstractDomain& dom,
                            WorklistMode mode = WorklistMode::Ordered,
                            SolveStats* stats = nullptr);

// One full sweep: does x satisfy every equation exactly?
bool verify_fixpoint(const EquationSystem& sys, const AbstractDomain& dom,
                     const std::vector<ValuePtr>& x);

} // namespace nlpabs
