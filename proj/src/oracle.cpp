#include "nlpabs/oracle.hpp"

#include "nlpabs/unify.hpp"

#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nlpabs {

namespace {

const Point& dest_of(const ProgramGraph& graph, const StackItem& item) {
    return graph.edges()[item.edge].p;
}

} // namespace

StateKind classify(const PointedProgram& prog, const ProgramGraph& graph,
                   const StackState& s) {
    const Point& p = dest_of(graph, s.front());
    if (!prog.is_exit_point(p) || s.size() > 1) return StateKind::Running;
    return prog.is_query_index(p.i) ? StateKind::Final : StateKind::Dead;
}

std::string state_key(const StackState& s) {
    std::ostringstream os;
    for (const auto& item : s) {
        os << item.edge << ':'
           << render_subst(canonical_substitution(item.theta)) << '|';
    }
    return os.str();
}

std::vector<StackState> initial_states(const PointedProgram& prog,
                                       const ProgramGraph& graph,
                                       const AbstractDomain& dom,
                                       const QueryValues& theta,
                                       const SampleMap& samples) {
    std::vector<StackState> out;
    for (const auto& [unit, subs] : samples) {
        std::size_t e0 = graph.edge_index(prog.entry(unit), Point{0, 0});
        const ValuePtr& ann = theta.at(unit);
        for (const auto& s : subs) {
            if (!dom.gamma_contains(ann, s)) {
                throw std::invalid_argument(
                    "sample " + render_subst(s) + " for goal " +
                    std::to_string(unit) + " lies outside its annotation " +
                    dom.render(ann));
            }
            out.push_back(StackState{StackItem{e0, s}});
        }
    }
    return out;
}

namespace {

// Entry bindings for calling the clause headed h with the literal atom b
// instantiated by theta; empty on unification failure.
std::optional<Substitution> call_bindings(const PointedProgram& prog,
                                          const Atom& b, const Substitution& th,
                                          std::size_t clause, FreshVarGen& gen) {
    auto u = unify_open(b, th, prog.head_of(clause), Substitution{}, gen);
    if (!u) return std::nullopt;
    return restrict_to(*u, prog.vars_of_unit(clause));
}

} // namespace

std::vector<StackState> successors(const PointedProgram& prog,
                                   const ProgramGraph& graph,
                                   const StackState& s, FreshVarGen& gen) {
    std::vector<StackState> out;
    const StackItem& top = s.front();
    const Point p = dest_of(graph, top);

    if (prog.is_body_position(p)) {
        const Literal& lit = prog.literal_at(p);
        const Atom& atom = lit.atom;
        // Calls: one branch per clause whose head unifies, by edge order.
        const auto& edges = graph.edges();
        for (std::size_t f = 0; f < edges.size(); ++f) {
            if (edges[f].cls != EdgeClass::E1 || !(edges[f].q == p)) continue;
            auto th = call_bindings(prog, atom, top.theta, edges[f].p.i, gen);
            if (!th) continue;
            if (lit.positive) {
                StackState next = s;
                next.insert(next.begin(), StackItem{f, std::move(*th)});
                out.push_back(std::move(next));
            } else {
                out.push_back(StackState{StackItem{f, std::move(*th)}});
            }
        }
        if (!lit.positive) {
            // Step across the negated literal with the bindings unchanged.
            std::size_t e3 = graph.edge_index(Point{p.i, p.j + 1}, p);
            StackState next = s;
            next.front() = StackItem{e3, top.theta};
            out.push_back(std::move(next));
        }
        return out;
    }

    // Top sits at a unit exit. With a caller below, return to it.
    if (s.size() >= 2) {
        const StackItem& below = s[1];
        const Point call_pt = dest_of(graph, below);
        auto u = unify_open(prog.head_of(p.i), top.theta,
                            prog.body_atom_at(call_pt), below.theta, gen);
        if (u) {
            std::size_t e2 =
                graph.edge_index(Point{call_pt.i, call_pt.j + 1}, p);
            StackState next(s.begin() + 2, s.end());
            next.insert(next.begin(),
                        StackItem{e2, restrict_to(
                                          *u, prog.vars_of_unit(call_pt.i))});
            out.push_back(std::move(next));
        }
    }
    return out;
}

ReachResult reachable(const PointedProgram& prog, const ProgramGraph& graph,
                      const std::vector<StackState>& initial,
                      const ReachOptions& opts, FreshVarGen& gen) {
    ReachResult r;
    std::set<std::string> seen;
    std::deque<std::size_t> frontier;

    auto admit = [&](StackState state, std::size_t depth) {
        std::string key = state_key(state);
        if (!seen.insert(std::move(key)).second) return;
        if (r.states.size() >= opts.state_cap) {
            r.truncated = true;
            return;
        }
        frontier.push_back(r.states.size());
        r.states.push_back(std::move(state));
        r.depth.push_back(depth);
    };

    for (const auto& s : initial) admit(s, 0);

    while (!frontier.empty()) {
        std::size_t k = frontier.front();
        frontier.pop_front();
        std::vector<StackState> succ =
            successors(prog, graph, r.states[k], gen);
        if (r.depth[k] >= opts.depth_cap) {
            // Not expanded; note when that provably hides a state.
            for (auto& next : succ) {
                if (!seen.count(state_key(next))) {
                    r.truncated = true;
                    break;
                }
            }
            continue;
        }
        for (auto& next : succ) admit(std::move(next), r.depth[k] + 1);
    }

    for (std::size_t k = 0; k < r.states.size(); ++k) {
        switch (classify(prog, graph, r.states[k])) {
        case StateKind::Final:
            r.finals.push_back(k);
            break;
        case StateKind::Dead:
            ++r.dead;
            break;
        case StateKind::Running:
            break;
        }
    }
    return r;
}

std::map<std::size_t, std::vector<Substitution>>
project_edges(const ReachResult& reach) {
    std::map<std::size_t, std::vector<Substitution>> buckets;
    std::map<std::size_t, std::set<std::string>> seen;
    for (const auto& state : reach.states) {
        for (const auto& item : state) {
            Substitution c = canonical_substitution(item.theta);
            if (seen[item.edge].insert(render_subst(c)).second) {
                buckets[item.edge].push_back(std::move(c));
            }
        }
    }
    return buckets;
}

std::vector<Substitution> answers(const ReachResult& reach) {
    std::vector<Substitution> out;
    std::set<std::string> seen;
    for (std::size_t k : reach.finals) {
        Substitution c = canonical_substitution(reach.states[k].front().theta);
        if (seen.insert(render_subst(c)).second) out.push_back(std::move(c));
    }
    return out;
}

std::vector<Violation> soundness_violations(const EquationSystem& sys,
                                            const AbstractDomain& dom,
                                            const std::vector<ValuePtr>& x,
                                            const ProgramGraph& graph,
                                            const ReachResult& reach) {
    std::map<Point, std::size_t> point_index;
    for (std::size_t k = 0; k < sys.points.size(); ++k) {
        point_index.emplace(sys.points[k], k);
    }

    std::vector<Violation> out;
    for (const auto& [edge, thetas] : project_edges(reach)) {
        std::size_t k = sys.kind == SystemKind::EdgeIndexed
                            ? edge
                            : point_index.at(graph.edges()[edge].p);
        for (const auto& th : thetas) {
            if (dom.gamma_contains(x[k], th)) continue;
            out.push_back(Violation{sys.eqs[k].index_name,
                                    render_edge(graph.edges()[edge]),
                                    render_subst(th), dom.render(x[k])});
        }
    }
    return out;
}

} // namespace nlpabs
