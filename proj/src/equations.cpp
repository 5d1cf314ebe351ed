#include "nlpabs/equations.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlpabs {

namespace {

const ValuePtr& query_value(const QueryValues& theta, std::size_t unit) {
    auto it = theta.find(unit);
    if (it == theta.end()) {
        throw std::invalid_argument("no annotation value for goal unit " +
                                    std::to_string(unit));
    }
    return it->second;
}

void add_ref(const Operand& op, std::set<std::size_t>& refs) {
    if (const auto* u = std::get_if<UnifyEntryOp>(&op)) {
        refs.insert(u->ref);
    } else if (const auto* x = std::get_if<UnifyExitOp>(&op)) {
        refs.insert(x->ref_exit);
        refs.insert(x->ref_call);
    } else if (const auto* c = std::get_if<CopyOp>(&op)) {
        refs.insert(c->ref);
    }
}

void finish_deps(EquationSystem& sys) {
    sys.deps.resize(sys.size());
    sys.rdeps.resize(sys.size());
    for (std::size_t k = 0; k < sys.size(); ++k) {
        std::set<std::size_t> refs;
        for (const auto& op : sys.eqs[k].operands) add_ref(op, refs);
        sys.deps[k].assign(refs.begin(), refs.end());
    }
    for (std::size_t k = 0; k < sys.size(); ++k) {
        for (std::size_t d : sys.deps[k]) sys.rdeps[d].push_back(k);
    }
    for (auto& r : sys.rdeps) {
        r.erase(std::unique(r.begin(), r.end()), r.end());
    }
}

} // namespace

EquationSystem build_edge_system(const PointedProgram& prog,
                                 const ProgramGraph& graph,
                                 const AbstractDomain& dom,
                                 const QueryValues& theta) {
    EquationSystem sys;
    sys.kind = SystemKind::EdgeIndexed;
    sys.edges = graph.edges();

    for (const Edge& e : sys.edges) {
        FlowEquation eq;
        eq.index_name = render_edge(e);
        eq.universe = prog.vars_of_unit(e.p.i);
        switch (e.cls) {
        case EdgeClass::E0:
            eq.operands.push_back(ConstOp{query_value(theta, e.p.i)});
            break;
        case EdgeClass::E1: {
            // Call into clause e.p.i from the literal at e.q: one unify per
            // value that can reach e.q.
            const Atom& body = prog.body_atom_at(e.q);
            const Atom& head = prog.head_of(e.p.i);
            ValuePtr id = dom.abstract_id(prog.vars_of_unit(e.p.i));
            for (std::size_t u : graph.edges_into(e.q)) {
                eq.operands.push_back(UnifyEntryOp{body, u, head, id});
            }
            break;
        }
        case EdgeClass::E2: {
            // Return from clause e.q.i to the point after the call at call_pt:
            // one unify per (value reaching the clause exit, value reaching
            // the call).
            Point call_pt{e.p.i, e.p.j - 1};
            const Atom& head = prog.head_of(e.q.i);
            const Atom& body = prog.body_atom_at(call_pt);
            for (std::size_t s : graph.edges_into(e.q)) {
                for (std::size_t c : graph.edges_into(call_pt)) {
                    eq.operands.push_back(UnifyExitOp{head, s, body, c});
                }
            }
            break;
        }
        case EdgeClass::E3:
            for (std::size_t u : graph.edges_into(e.q)) {
                eq.operands.push_back(CopyOp{u});
            }
            break;
        }
        sys.eqs.push_back(std::move(eq));
    }
    finish_deps(sys);
    return sys;
}

EquationSystem build_point_system(const PointedProgram& prog,
                                  const ProgramGraph& graph,
                                  const AbstractDomain& dom,
                                  const QueryValues& theta) {
    EquationSystem sys;
    sys.kind = SystemKind::PointIndexed;
    sys.points = prog.all_points();

    std::map<Point, std::size_t> index_of;
    for (std::size_t k = 0; k < sys.points.size(); ++k) {
        index_of.emplace(sys.points[k], k);
    }

    for (const Point& p : sys.points) {
        FlowEquation eq;
        eq.index_name = render_point(p);
        eq.universe = prog.vars_of_unit(p.i);
        switch (graph.point_class(p)) {
        case PointClass::None:
            break; // no predecessors: stays at bottom
        case PointClass::N0:
            eq.operands.push_back(ConstOp{query_value(theta, p.i)});
            break;
        case PointClass::N1: {
            const Atom& head = prog.head_of(p.i);
            ValuePtr id = dom.abstract_id(prog.vars_of_unit(p.i));
            for (std::size_t u : graph.edges_into(p)) {
                const Edge& e = graph.edges()[u];
                const Atom& body = prog.body_atom_at(e.q);
                eq.operands.push_back(
                    UnifyEntryOp{body, index_of.at(e.q), head, id});
            }
            break;
        }
        case PointClass::N2: {
            Point call_pt{p.i, p.j - 1};
            const Atom& body = prog.body_atom_at(call_pt);
            for (std::size_t u : graph.edges_into(p)) {
                const Edge& e = graph.edges()[u];
                if (e.cls != EdgeClass::E2) continue;
                const Atom& head = prog.head_of(e.q.i);
                eq.operands.push_back(UnifyExitOp{head, index_of.at(e.q), body,
                                                  index_of.at(call_pt)});
            }
            break;
        }
        case PointClass::N3:
            eq.operands.push_back(CopyOp{index_of.at(Point{p.i, p.j - 1})});
            break;
        }
        sys.eqs.push_back(std::move(eq));
    }
    finish_deps(sys);
    return sys;
}

ValuePtr evaluate(const EquationSystem& sys, const AbstractDomain& dom,
                  std::size_t k, const std::vector<ValuePtr>& x,
                  std::size_t* unify_ops) {
    const FlowEquation& eq = sys.eqs[k];
    ValuePtr acc = dom.bot(eq.universe);
    for (const auto& op : eq.operands) {
        ValuePtr v;
        if (const auto* c = std::get_if<ConstOp>(&op)) {
            v = c->value;
        } else if (const auto* u = std::get_if<UnifyEntryOp>(&op)) {
            v = dom.abstract_unify(u->body, x[u->ref], u->head, u->id);
            if (unify_ops) ++*unify_ops;
        } else if (const auto* e = std::get_if<UnifyExitOp>(&op)) {
            v = dom.abstract_unify(e->head, x[e->ref_exit], e->body,
                                   x[e->ref_call]);
            if (unify_ops) ++*unify_ops;
        } else {
            v = x[std::get<CopyOp>(op).ref];
        }
        acc = dom.join(acc, v);
    }
    return acc;
}

std::size_t count_unify_ops(const EquationSystem& sys) {
    std::size_t n = 0;
    for (const auto& eq : sys.eqs) {
        for (const auto& op : eq.operands) {
            if (std::holds_alternative<UnifyEntryOp>(op) ||
                std::holds_alternative<UnifyExitOp>(op)) {
                ++n;
            }
        }
    }
    return n;
}

std::string render_operand(const EquationSystem& sys, const AbstractDomain& dom,
                           const Operand& op) {
    std::ostringstream os;
    if (const auto* c = std::get_if<ConstOp>(&op)) {
        os << "const " << dom.render(c->value);
    } else if (const auto* u = std::get_if<UnifyEntryOp>(&op)) {
        os << "unify(" << render_atom(u->body) << " @ ["
           << sys.eqs[u->ref].index_name << "], " << render_atom(u->head)
           << " @ id)";
    } else if (const auto* e = std::get_if<UnifyExitOp>(&op)) {
        os << "unify(" << render_atom(e->head) << " @ ["
           << sys.eqs[e->ref_exit].index_name << "], " << render_atom(e->body)
           << " @ [" << sys.eqs[e->ref_call].index_name << "])";
    } else {
        os << "copy [" << sys.eqs[std::get<CopyOp>(op).ref].index_name << "]";
    }
    return os.str();
}

std::string render_equation(const EquationSystem& sys,
                            const AbstractDomain& dom, std::size_t k) {
    std::ostringstream os;
    os << "X[" << sys.eqs[k].index_name << "] = ";
    if (sys.eqs[k].operands.empty()) {
        os << "bot";
        return os.str();
    }
    bool first = true;
    for (const auto& op : sys.eqs[k].operands) {
        if (!first) os << " | ";
        first = false;
        os << render_operand(sys, dom, op);
    }
    return os.str();
}

} // namespace nlpabs
