// Program graph over program points.
//
// An edge <p <- q> records that control can move from point q to point p.
// Edge classes:
//   E0  <(k,1) <- (0,0)>       goal start
//   E1  <(i,1) <- q>           call: the literal at q (positive or negated)
//                              unifies with clause i's head after renaming
//   E2  <q+ <- exit(i)>        return: paired with the E1 edge
//                              <(i,1) <- q> for a positive literal at q
//   E3  <q+ <- q>              negation step over the literal at q
// Edges are stored sorted by (destination, source); the class is uniquely
// determined by the endpoint pair.

#pragma once

#include "nlpabs/program.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace nlpabs {

enum class EdgeClass { E0, E1, E2, E3 };

std::string edge_class_name(EdgeClass c);

struct Edge {
    Point p; // destination
    Point q; // source
    EdgeClass cls;
};

std::string render_edge(const Edge& e); // "(1,2)<-(3,1)"

// Point classes for the point-indexed semantics: the class of the incoming
// edges, or None for points without predecessors. The four classes are
// pairwise disjoint on well-formed programs.
enum class PointClass { None, N0, N1, N2, N3 };

std::string point_class_name(PointClass c);

class ProgramGraph {
public:
    ProgramGraph(const PointedProgram& program, FreshVarGen& gen);

    const std::vector<Edge>& edges() const { return edges_; }

    // Index into edges() for a destination/source pair, if present.
    bool has_edge(const Point& p, const Point& q) const;
    std::size_t edge_index(const Point& p, const Point& q) const;

    // Indices of the edges <p <- q> for fixed destination p, ascending.
    const std::vector<std::size_t>& edges_into(const Point& p) const;

    PointClass point_class(const Point& p) const;

    std::size_t count_of(EdgeClass c) const;

    // Largest predecessor-edge count over all program points.
    std::size_t max_predecessors() const { return pmax_; }

    // All graph nodes: (0,0) when the program has goals, then every
    // program point, ascending.
    std::vector<Point> nodes(const PointedProgram& program) const;

private:
    std::vector<Edge> edges_;
    std::map<std::pair<Point, Point>, std::size_t> by_endpoints_;
    std::map<Point, std::vector<std::size_t>> into_;
    std::map<Point, PointClass> point_class_;
    std::size_t pmax_ = 0;
    std::vector<std::size_t> class_counts_{0, 0, 0, 0};
};

std::string graph_to_dot(const PointedProgram& program, const ProgramGraph& g);

} // namespace nlpabs
