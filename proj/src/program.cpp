#include "nlpabs/program.hpp"

#include <sstream>

namespace nlpabs {

std::string render_point(const Point& p) {
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

namespace {

VarSet unit_variables(const Atom* head, const std::vector<Literal>& body) {
    VarSet out;
    auto add = [&out](const Atom& a) {
        VarSet vs = var_set_of(a);
        out.insert(vs.begin(), vs.end());
    };
    if (head) add(*head);
    for (const auto& l : body) add(l.atom);
    return out;
}

} // namespace

PointedProgram::PointedProgram(std::vector<Clause> clauses,
                               std::vector<Query> queries)
    : clauses_(std::move(clauses)), queries_(std::move(queries)) {
    if (clauses_.empty()) {
        throw std::invalid_argument("program has no clauses");
    }
    for (const auto& q : queries_) {
        if (q.body.empty()) {
            throw std::invalid_argument("goal has an empty body");
        }
    }
    unit_vars_.reserve(unit_count());
    for (const auto& c : clauses_) {
        unit_vars_.push_back(unit_variables(&c.head, c.body));
    }
    for (const auto& q : queries_) {
        unit_vars_.push_back(unit_variables(nullptr, q.body));
    }
    for (std::size_t i = 1; i <= unit_count(); ++i) {
        for (std::size_t j = 1; j <= body_length(i) + 1; ++j) {
            points_.push_back({i, j});
        }
    }
}

void PointedProgram::check_unit(std::size_t i) const {
    if (i < 1 || i > unit_count()) {
        throw std::out_of_range("unit index " + std::to_string(i) +
                                " out of range");
    }
}

const Clause& PointedProgram::clause_at(std::size_t i) const {
    if (!is_clause_index(i)) {
        throw std::out_of_range("unit " + std::to_string(i) +
                                " is not a clause");
    }
    return clauses_[i - 1];
}

const Query& PointedProgram::query_at(std::size_t i) const {
    if (!is_query_index(i)) {
        throw std::out_of_range("unit " + std::to_string(i) +
                                " is not a goal");
    }
    return queries_[i - clauses_.size() - 1];
}

std::size_t PointedProgram::body_length(std::size_t i) const {
    check_unit(i);
    return is_clause_index(i) ? clauses_[i - 1].body.size()
                              : queries_[i - clauses_.size() - 1].body.size();
}

const Atom& PointedProgram::head_of(std::size_t i) const {
    return clause_at(i).head;
}

const Literal& PointedProgram::literal_at(const Point& p) const {
    check_unit(p.i);
    if (p.j < 1 || p.j > body_length(p.i)) {
        throw std::out_of_range("point " + render_point(p) +
                                " is not a body position");
    }
    const std::vector<Literal>& body =
        is_clause_index(p.i) ? clauses_[p.i - 1].body
                             : queries_[p.i - clauses_.size() - 1].body;
    return body[p.j - 1];
}

const Atom& PointedProgram::body_atom_at(const Point& p) const {
    return literal_at(p).atom;
}

const VarSet& PointedProgram::vars_of_unit(std::size_t i) const {
    check_unit(i);
    return unit_vars_[i - 1];
}

bool PointedProgram::is_body_position(const Point& p) const {
    return p.i >= 1 && p.i <= unit_count() && p.j >= 1 &&
           p.j <= body_length(p.i);
}

bool PointedProgram::is_exit_point(const Point& p) const {
    return p.i >= 1 && p.i <= unit_count() && p.j == body_length(p.i) + 1;
}

namespace {

TermPtr unanonymize(const TermPtr& t) {
    if (t->kind == Term::Kind::Var) {
        return is_anonymous_var(t->name) ? mk_var("_") : t;
    }
    if (t->args.empty()) return t;
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    for (const auto& a : t->args) args.push_back(unanonymize(a));
    return mk_fun(t->name, std::move(args));
}

std::string print_atom(const Atom& a) {
    Atom out;
    out.pred = a.pred;
    out.args.reserve(a.args.size());
    for (const auto& t : a.args) out.args.push_back(unanonymize(t));
    return render_atom(out);
}

std::string print_literal(const Literal& l) {
    return l.positive ? print_atom(l.atom) : "\\+ " + print_atom(l.atom);
}

std::string print_body(const std::vector<Literal>& body) {
    std::ostringstream os;
    for (std::size_t i = 0; i < body.size(); ++i) {
        if (i) os << ", ";
        os << print_literal(body[i]);
    }
    return os.str();
}

} // namespace

std::string pretty_print(const PointedProgram& p) {
    std::ostringstream os;
    for (std::size_t i = 1; i <= p.clause_count(); ++i) {
        const Clause& c = p.clause_at(i);
        os << print_atom(c.head);
        if (!c.body.empty()) os << " :- " << print_body(c.body);
        os << ".\n";
    }
    for (std::size_t k = p.clause_count() + 1; k <= p.unit_count(); ++k) {
        const Query& q = p.query_at(k);
        os << ":- query(";
        if (q.body.size() > 1) {
            os << '(' << print_body(q.body) << ')';
        } else {
            os << print_body(q.body);
        }
        os << ", " << render_term(unanonymize(q.annotation)) << ").\n";
    }
    return os.str();
}

} // namespace nlpabs
