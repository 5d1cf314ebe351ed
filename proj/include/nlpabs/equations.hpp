// Dataflow equation systems over a program graph.
//
// Two system shapes share one representation. The edge-indexed system has
// one equation per graph edge: the value on an edge describes the bindings
// that travel across it. The point-indexed system has one equation per
// program point: the value at a point merges everything that can arrive
// there. Either way an equation is a finite join of operands, each operand
// a constant, a copy of another index, or one abstract unification whose
// abstract arguments are other indices. An empty join means bottom.
#pragma once

#include "nlpabs/domain.hpp"
#include "nlpabs/graph.hpp"

#include <cstddef>
#include <map>
#include <variant>
#include <vector>

namespace nlpabs {

// Query annotation value at the query's entry.
struct ConstOp {
    ValuePtr value;
};

// abstract_unify(body, X[ref], head, id): a call crossing into a clause.
// `id` is the identity abstraction over the clause's variables, fixed at
// build time.
struct UnifyEntryOp {
    Atom body;
    std::size_t ref;
    Atom head;
    ValuePtr id;
};

// abstract_unify(head, X[ref_exit], body, X[ref_call]): a success crossing
// back from a clause exit into the caller.
struct UnifyExitOp {
    Atom head;
    std::size_t ref_exit;
    Atom body;
    std::size_t ref_call;
};

// The value of another index, unchanged.
struct CopyOp {
    std::size_t ref;
};

using Operand = std::variant<ConstOp, UnifyEntryOp, UnifyExitOp, CopyOp>;

struct FlowEquation {
    std::string index_name; // "(1,2)<-(3,1)" for edges, "(1,2)" for points
    VarSet universe;        // variables the value at this index ranges over
    std::vector<Operand> operands;
};

enum class SystemKind { EdgeIndexed, PointIndexed };

struct EquationSystem {
    SystemKind kind;
    std::vector<FlowEquation> eqs;
    // eqs[k] belongs to edges[k] (edge-indexed) or points[k] (point-indexed).
    std::vector<Edge> edges;
    std::vector<Point> points;
    // deps[k]: indices eqs[k] reads; rdeps[k]: indices reading k. Sorted.
    std::vector<std::vector<std::size_t>> deps;
    std::vector<std::vector<std::size_t>> rdeps;

    std::size_t size() const { return eqs.size(); }
};

// Annotation value per query unit index (clause count + 1 .. + query count).
using QueryValues = std::map<std::size_t, ValuePtr>;

EquationSystem build_edge_system(const PointedProgram& prog,
                                 const ProgramGraph& graph,
                                 const AbstractDomain& dom,
                                 const QueryValues& theta);

EquationSystem build_point_system(const PointedProgram& prog,
                                  const ProgramGraph& graph,
                                  const AbstractDomain& dom,
                                  const QueryValues& theta);

// Right-hand side of eqs[k] under assignment x. Empty joins yield bottom.
// unify_ops, when given, is incremented once per abstract unification.
ValuePtr evaluate(const EquationSystem& sys, const AbstractDomain& dom,
                  std::size_t k, const std::vector<ValuePtr>& x,
                  std::size_t* unify_ops = nullptr);

// Abstract unifications in one full evaluation pass of the system.
std::size_t count_unify_ops(const EquationSystem& sys);

std::string render_operand(const EquationSystem& sys, const AbstractDomain& dom,
                           const Operand& op);
std::string render_equation(const EquationSystem& sys,
                            const AbstractDomain& dom, std::size_t k);

} // namespace nlpabs
