// nlpabs: static analysis of normal logic programs over abstract domains.
//
//   nlpabs graph   prog.pl [--format text|json|dot]
//   nlpabs analyze prog.pl [--semantics flat|diamond] [--domain NAME]
//                          [--format text|json] [--stats] [--dump-equations]
//   nlpabs check   prog.pl --queries FILE [--semantics ...] [--domain NAME]
//                          [--format text|json] [--depth N] [--max-states N]
//   nlpabs trace   prog.pl --queries FILE [--domain NAME]
//                          [--format text|json] [--depth N] [--max-states N]
//
// Exit codes: 0 success, 1 soundness violations found, 2 usage/input errors.

#include "nlpabs/graph.hpp"
#include "nlpabs/groundness.hpp"
#include "nlpabs/oracle.hpp"
#include "nlpabs/parser.hpp"
#include "nlpabs/solver.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace nlpabs;

namespace {

// Reports a problem with the input or the invocation; maps to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A groundness variant whose unification deliberately overclaims: it marks
// every variable of the target universe ground. It exists so the soundness
// checker itself can be exercised end to end; `check` against it must fail.
class UnsoundGroundness : public GroundnessDomain {
public:
    std::string name() const override { return "groundness-unsound"; }
    ValuePtr abstract_unify(const Atom&, const ValuePtr&, const Atom&,
                            const ValuePtr& sigma) const override {
        VarSet u = universe_of(sigma);
        return std::make_shared<GroundValue>(u, u);
    }
};

std::unique_ptr<AbstractDomain> make_domain(const std::string& name) {
    if (name == "groundness") return std::make_unique<GroundnessDomain>();
    if (name == "groundness-unsound") {
        return std::make_unique<UnsoundGroundness>();
    }
    throw InputError("unknown domain '" + name + "'");
}

struct Pipeline {
    PointedProgram prog;
    ProgramGraph graph;
    FreshVarGen gen;

    explicit Pipeline(const std::string& path, FreshVarGen g = {})
        : prog(parse_program(read_file(path))), graph(prog, g), gen(g) {}
};

QueryValues annotation_values(const PointedProgram& prog,
                              const AbstractDomain& dom) {
    QueryValues theta;
    for (std::size_t k = prog.clause_count() + 1; k <= prog.unit_count(); ++k) {
        theta[k] = dom.parse_annotation(prog.query_at(k).annotation,
                                        prog.vars_of_unit(k));
    }
    return theta;
}

int cmd_graph(const std::string& path, const std::string& format) {
    Pipeline pl(path);
    const auto& g = pl.graph;
    if (format == "dot") {
        std::cout << graph_to_dot(pl.prog, g);
        return 0;
    }
    if (format == "json") {
        json out;
        out["schema"] = 1;
        out["nodes"] = json::array();
        for (const auto& p : g.nodes(pl.prog)) {
            out["nodes"].push_back(render_point(p));
        }
        out["edges"] = json::array();
        for (const auto& e : g.edges()) {
            out["edges"].push_back({{"to", render_point(e.p)},
                                    {"from", render_point(e.q)},
                                    {"class", edge_class_name(e.cls)}});
        }
        json counts;
        for (auto c : {EdgeClass::E0, EdgeClass::E1, EdgeClass::E2,
                       EdgeClass::E3}) {
            counts[edge_class_name(c)] = g.count_of(c);
        }
        out["class_counts"] = counts;
        out["pmax"] = g.max_predecessors();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << "nodes: " << g.nodes(pl.prog).size()
              << "  edges: " << g.edges().size()
              << "  pmax: " << g.max_predecessors() << "\n";
    for (const auto& e : g.edges()) {
        std::cout << render_edge(e) << "  " << edge_class_name(e.cls) << "\n";
    }
    return 0;
}

struct Solved {
    EquationSystem sys;
    std::vector<ValuePtr> values;
    SolveStats stats;
};

Solved solve_program(const Pipeline& pl, const AbstractDomain& dom,
                     const std::string& semantics) {
    QueryValues theta = annotation_values(pl.prog, dom);
    Solved s;
    s.sys = semantics == "diamond"
                ? build_point_system(pl.prog, pl.graph, dom, theta)
                : build_edge_system(pl.prog, pl.graph, dom, theta);
    s.values = solve(s.sys, dom, WorklistMode::Ordered, &s.stats);
    return s;
}

int cmd_analyze(const std::string& path, const std::string& semantics,
                const std::string& domain, const std::string& format,
                bool stats, bool dump_equations) {
    Pipeline pl(path);
    auto dom = make_domain(domain);
    Solved s = solve_program(pl, *dom, semantics);

    if (format == "json") {
        json out;
        out["schema"] = 1;
        out["semantics"] = semantics;
        out["domain"] = dom->name();
        if (dump_equations) {
            out["equations"] = json::array();
            for (std::size_t k = 0; k < s.sys.size(); ++k) {
                json eq;
                eq["index"] = s.sys.eqs[k].index_name;
                eq["universe"] = json::array();
                for (const auto& v : s.sys.eqs[k].universe) {
                    eq["universe"].push_back(v);
                }
                eq["operands"] = json::array();
                for (const auto& op : s.sys.eqs[k].operands) {
                    eq["operands"].push_back(render_operand(s.sys, *dom, op));
                }
                out["equations"].push_back(eq);
            }
            out["unify_operands"] = count_unify_ops(s.sys);
        }
        out["values"] = json::array();
        for (std::size_t k = 0; k < s.sys.size(); ++k) {
            out["values"].push_back({{"index", s.sys.eqs[k].index_name},
                                     {"value", dom->render(s.values[k])}});
        }
        if (stats) {
            out["stats"] = {{"evaluations", s.stats.evaluations},
                            {"updates", s.stats.updates},
                            {"unify_ops", s.stats.unify_ops}};
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    if (dump_equations) {
        for (std::size_t k = 0; k < s.sys.size(); ++k) {
            std::cout << render_equation(s.sys, *dom, k) << "\n";
        }
        std::cout << "unify operands: " << count_unify_ops(s.sys) << "\n";
    }
    for (std::size_t k = 0; k < s.sys.size(); ++k) {
        std::cout << s.sys.eqs[k].index_name << ": " << dom->render(s.values[k])
                  << "\n";
    }
    if (stats) {
        std::cout << "stats: evaluations=" << s.stats.evaluations
                  << " updates=" << s.stats.updates
                  << " unify_ops=" << s.stats.unify_ops << "\n";
    }
    return 0;
}

ReachResult run_oracle(Pipeline& pl, const AbstractDomain& dom,
                       const std::string& queries_path,
                       const ReachOptions& opts) {
    SampleMap samples =
        parse_samples(read_file(queries_path), pl.prog);
    QueryValues theta = annotation_values(pl.prog, dom);
    auto initial = initial_states(pl.prog, pl.graph, dom, theta, samples);
    return reachable(pl.prog, pl.graph, initial, opts, pl.gen);
}

int cmd_check(const std::string& path, const std::string& queries_path,
              const std::string& semantics, const std::string& domain,
              const std::string& format, const ReachOptions& opts) {
    Pipeline pl(path);
    auto dom = make_domain(domain);
    Solved s = solve_program(pl, *dom, semantics);
    ReachResult reach = run_oracle(pl, *dom, queries_path, opts);
    auto violations =
        soundness_violations(s.sys, *dom, s.values, pl.graph, reach);

    if (format == "json") {
        json out;
        out["schema"] = 1;
        out["semantics"] = semantics;
        out["domain"] = dom->name();
        out["states"] = reach.states.size();
        out["finals"] = reach.finals.size();
        out["dead"] = reach.dead;
        out["truncated"] = reach.truncated;
        out["violations"] = json::array();
        for (const auto& v : violations) {
            out["violations"].push_back({{"index", v.index},
                                         {"edge", v.edge},
                                         {"theta", v.theta},
                                         {"value", v.value}});
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "states: " << reach.states.size()
                  << "  finals: " << reach.finals.size()
                  << "  dead: " << reach.dead
                  << "  truncated: " << (reach.truncated ? "yes" : "no")
                  << "\n";
        for (const auto& v : violations) {
            std::cout << "violation at " << v.index << " (item on " << v.edge
                      << "): " << v.theta << " not in " << v.value << "\n";
        }
        std::cout << violations.size() << " violations\n";
    }
    return violations.empty() ? 0 : 1;
}

int cmd_trace(const std::string& path, const std::string& queries_path,
              const std::string& domain, const std::string& format,
              const ReachOptions& opts) {
    Pipeline pl(path);
    auto dom = make_domain(domain);
    ReachResult reach = run_oracle(pl, *dom, queries_path, opts);
    auto result_answers = answers(reach);

    auto kind_name = [&](std::size_t k) {
        switch (classify(pl.prog, pl.graph, reach.states[k])) {
        case StateKind::Final:
            return "final";
        case StateKind::Dead:
            return "dead";
        case StateKind::Running:
            break;
        }
        return "running";
    };
    auto stack_item = [&](const StackItem& item) {
        return render_edge(pl.graph.edges()[item.edge]) + " " +
               render_subst(canonical_substitution(item.theta));
    };

    if (format == "json") {
        json out;
        out["schema"] = 1;
        out["domain"] = dom->name();
        out["truncated"] = reach.truncated;
        out["states"] = json::array();
        for (std::size_t k = 0; k < reach.states.size(); ++k) {
            json st;
            st["depth"] = reach.depth[k];
            st["kind"] = kind_name(k);
            st["stack"] = json::array();
            for (const auto& item : reach.states[k]) {
                st["stack"].push_back(stack_item(item));
            }
            out["states"].push_back(st);
        }
        out["answers"] = json::array();
        for (const auto& a : result_answers) {
            out["answers"].push_back(render_subst(a));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    for (std::size_t k = 0; k < reach.states.size(); ++k) {
        std::cout << "state " << k << " depth " << reach.depth[k] << " "
                  << kind_name(k) << ":";
        for (const auto& item : reach.states[k]) {
            std::cout << " [" << stack_item(item) << "]";
        }
        std::cout << "\n";
    }
    std::cout << "truncated: " << (reach.truncated ? "yes" : "no") << "\n";
    std::cout << "answers: " << result_answers.size() << "\n";
    for (const auto& a : result_answers) {
        std::cout << render_subst(a) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"static analysis of normal logic programs"};
    app.require_subcommand(1);

    std::string path;
    std::string semantics = "flat";
    std::string domain = "groundness";
    std::string format = "text";
    std::string queries_path;
    ReachOptions opts;
    bool stats = false;
    bool dump_equations = false;

    auto add_common = [&](CLI::App* cmd, bool with_semantics, bool dot_ok,
                          bool with_queries) {
        cmd->add_option("file", path, "program file")->required();
        cmd->add_option("--domain", domain, "abstract domain name");
        if (with_semantics) {
            cmd->add_option("--semantics", semantics,
                            "equation system: per edge or per point")
                ->check(CLI::IsMember({"flat", "diamond"}));
        }
        std::vector<std::string> formats = {"text", "json"};
        if (dot_ok) formats.push_back("dot");
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember(formats));
        if (with_queries) {
            cmd->add_option("--queries", queries_path,
                            "sample substitutions file")
                ->required();
            cmd->add_option("--depth", opts.depth_cap,
                            "do not expand states past this depth");
            cmd->add_option("--max-states", opts.state_cap,
                            "stop exploring past this many states");
        }
    };

    CLI::App* graph_cmd = app.add_subcommand("graph", "print the program graph");
    add_common(graph_cmd, false, true, false);

    CLI::App* analyze_cmd =
        app.add_subcommand("analyze", "solve the dataflow equations");
    add_common(analyze_cmd, true, false, false);
    analyze_cmd->add_flag("--stats", stats, "print solver statistics");
    analyze_cmd->add_flag("--dump-equations", dump_equations,
                          "print the equation system");

    CLI::App* check_cmd = app.add_subcommand(
        "check", "compare the analysis against a bounded concrete search");
    add_common(check_cmd, true, false, true);

    CLI::App* trace_cmd = app.add_subcommand(
        "trace", "run the bounded concrete search and list states");
    add_common(trace_cmd, false, false, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (graph_cmd->parsed()) return cmd_graph(path, format);
        if (analyze_cmd->parsed()) {
            return cmd_analyze(path, semantics, domain, format, stats,
                               dump_equations);
        }
        if (check_cmd->parsed()) {
            return cmd_check(path, queries_path, semantics, domain, format,
                             opts);
        }
        return cmd_trace(path, queries_path, domain, format, opts);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
