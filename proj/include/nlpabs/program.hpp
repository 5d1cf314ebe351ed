// Normal logic programs with program points.
//
// A program is a list of clauses (definite rules whose bodies may contain
// negated literals) together with goal units carrying an abstract-domain
// annotation payload. Units are numbered 1..n for clauses in textual order
// and n+1..n+g for goals. Unit i with body length m has points (i,1) ..
// (i,m+1): point (i,j) with j <= m sits directly before the j-th body
// literal, (i,m+1) is the unit's exit. (0,0) is the dummy source used for
// goal-start edges.

#pragma once

#include "nlpabs/term.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace nlpabs {

struct Point {
    std::size_t i = 0;
    std::size_t j = 0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.i == b.i && a.j == b.j;
    }
    friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
    friend bool operator<(const Point& a, const Point& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    }
};

std::string render_point(const Point& p);

struct Clause {
    Atom head;
    std::vector<Literal> body;
};

struct Query {
    std::vector<Literal> body; // at least one literal
    TermPtr annotation;        // domain-interpreted payload
};

class PointedProgram {
public:
    PointedProgram(std::vector<Clause> clauses, std::vector<Query> queries);

    std::size_t clause_count() const { return clauses_.size(); }
    std::size_t query_count() const { return queries_.size(); }
    std::size_t unit_count() const { return clauses_.size() + queries_.size(); }

    bool is_clause_index(std::size_t i) const {
        return i >= 1 && i <= clauses_.size();
    }
    bool is_query_index(std::size_t i) const {
        return i > clauses_.size() && i <= unit_count();
    }

    const Clause& clause_at(std::size_t i) const;
    const Query& query_at(std::size_t i) const;

    // m[i]: number of body literals of unit i.
    std::size_t body_length(std::size_t i) const;

    // H_i: clause heads only; goals have none.
    const Atom& head_of(std::size_t i) const;

    // L_p / B_p for body positions (i,j), 1 <= j <= m[i].
    const Literal& literal_at(const Point& p) const;
    const Atom& body_atom_at(const Point& p) const;

    // V_i: every variable occurring in unit i.
    const VarSet& vars_of_unit(std::size_t i) const;

    Point entry(std::size_t i) const { return {i, 1}; }
    Point exit(std::size_t i) const { return {i, body_length(i) + 1}; }
    bool is_body_position(const Point& p) const;
    bool is_exit_point(const Point& p) const;

    // All points (i,j), i in 1..n+g, j in 1..m[i]+1, in ascending order.
    const std::vector<Point>& all_points() const { return points_; }

private:
    void check_unit(std::size_t i) const;

    std::vector<Clause> clauses_;
    std::vector<Query> queries_;
    std::vector<VarSet> unit_vars_; // index i-1
    std::vector<Point> points_;
};

// Renders the program in parseable concrete syntax, one unit per line.
// Anonymous variables print as '_'.
std::string pretty_print(const PointedProgram& p);

} // namespace nlpabs
