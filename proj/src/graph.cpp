#include "nlpabs/graph.hpp"

#include "nlpabs/unify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nlpabs {

std::string edge_class_name(EdgeClass c) {
    switch (c) {
    case EdgeClass::E0: return "E0";
    case EdgeClass::E1: return "E1";
    case EdgeClass::E2: return "E2";
    case EdgeClass::E3: return "E3";
    }
    return "?";
}

std::string render_edge(const Edge& e) {
    return render_point(e.p) + "<-" + render_point(e.q);
}

std::string point_class_name(PointClass c) {
    switch (c) {
    case PointClass::None: return "none";
    case PointClass::N0: return "N0";
    case PointClass::N1: return "N1";
    case PointClass::N2: return "N2";
    case PointClass::N3: return "N3";
    }
    return "?";
}

ProgramGraph::ProgramGraph(const PointedProgram& program, FreshVarGen& gen) {
    const std::size_t n = program.clause_count();
    const std::size_t total = program.unit_count();

    // E0: one start edge per goal.
    for (std::size_t k = n + 1; k <= total; ++k) {
        edges_.push_back({program.entry(k), Point{0, 0}, EdgeClass::E0});
    }

    // E1: body literal at q can call clause i. Membership only depends on
    // the literal and head skeletons, so any fresh renaming decides it.
    for (std::size_t u = 1; u <= total; ++u) {
        for (std::size_t j = 1; j <= program.body_length(u); ++j) {
            const Point q{u, j};
            const Atom& body = program.body_atom_at(q);
            for (std::size_t i = 1; i <= n; ++i) {
                Atom renamed = rename_apart(body, gen).first;
                if (mgu(renamed, program.head_of(i))) {
                    edges_.push_back({program.entry(i), q, EdgeClass::E1});
                }
            }
        }
    }

    // E2 and E3 follow from the E1 set and the literal signs.
    std::vector<Edge> derived;
    for (const Edge& e : edges_) {
        if (e.cls != EdgeClass::E1) continue;
        const Literal& lit = program.literal_at(e.q);
        if (lit.positive) {
            const Point after{e.q.i, e.q.j + 1};
            derived.push_back({after, program.exit(e.p.i), EdgeClass::E2});
        }
    }
    for (std::size_t u = 1; u <= total; ++u) {
        for (std::size_t j = 1; j <= program.body_length(u); ++j) {
            const Point q{u, j};
            if (!program.literal_at(q).positive) {
                derived.push_back({Point{u, j + 1}, q, EdgeClass::E3});
            }
        }
    }
    edges_.insert(edges_.end(), derived.begin(), derived.end());

    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
        if (a.p != b.p) return a.p < b.p;
        return a.q < b.q;
    });

    for (std::size_t idx = 0; idx < edges_.size(); ++idx) {
        const Edge& e = edges_[idx];
        auto key = std::make_pair(e.p, e.q);
        if (!by_endpoints_.emplace(key, idx).second) {
            throw std::logic_error("duplicate edge " + render_edge(e));
        }
        into_[e.p].push_back(idx);
        class_counts_[static_cast<std::size_t>(e.cls)] += 1;

        PointClass pc = PointClass::None;
        switch (e.cls) {
        case EdgeClass::E0: pc = PointClass::N0; break;
        case EdgeClass::E1: pc = PointClass::N1; break;
        case EdgeClass::E2: pc = PointClass::N2; break;
        case EdgeClass::E3: pc = PointClass::N3; break;
        }
        auto [it, inserted] = point_class_.emplace(e.p, pc);
        if (!inserted && it->second != pc) {
            throw std::logic_error("point " + render_point(e.p) +
                                   " has incoming edges of multiple classes");
        }
    }

    for (const auto& [point, idxs] : into_) {
        pmax_ = std::max(pmax_, idxs.size());
    }
}

bool ProgramGraph::has_edge(const Point& p, const Point& q) const {
    return by_endpoints_.count({p, q}) != 0;
}

std::size_t ProgramGraph::edge_index(const Point& p, const Point& q) const {
    auto it = by_endpoints_.find({p, q});
    if (it == by_endpoints_.end()) {
        throw std::out_of_range("no edge " + render_point(p) + "<-" +
                                render_point(q));
    }
    return it->second;
}

const std::vector<std::size_t>& ProgramGraph::edges_into(const Point& p) const {
    static const std::vector<std::size_t> empty;
    auto it = into_.find(p);
    return it == into_.end() ? empty : it->second;
}

PointClass ProgramGraph::point_class(const Point& p) const {
    auto it = point_class_.find(p);
    return it == point_class_.end() ? PointClass::None : it->second;
}

std::size_t ProgramGraph::count_of(EdgeClass c) const {
    return class_counts_[static_cast<std::size_t>(c)];
}

std::vector<Point> ProgramGraph::nodes(const PointedProgram& program) const {
    std::vector<Point> out;
    if (program.query_count() > 0) out.push_back({0, 0});
    const auto& pts = program.all_points();
    out.insert(out.end(), pts.begin(), pts.end());
    return out;
}

std::string graph_to_dot(const PointedProgram& program, const ProgramGraph& g) {
    std::ostringstream os;
    os << "digraph program {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle, fontsize=10];\n";
    for (const Point& p : g.nodes(program)) {
        os << "  \"" << render_point(p) << "\";\n";
    }
    for (const Edge& e : g.edges()) {
        os << "  \"" << render_point(e.q) << "\" -> \"" << render_point(e.p)
           << "\" [label=\"" << edge_class_name(e.cls) << "\"";
        switch (e.cls) {
        case EdgeClass::E0: os << ", style=bold"; break;
        case EdgeClass::E1: break;
        case EdgeClass::E2: os << ", style=dotted"; break;
        case EdgeClass::E3: os << ", style=dashed"; break;
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace nlpabs
