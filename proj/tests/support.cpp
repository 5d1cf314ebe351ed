#include "support.hpp"

#include "nlpabs/term.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <sys/wait.h>

namespace nlpabs::testsupport {

std::uint64_t test_seed() {
    if (const char* s = std::getenv("NLPABS_SEED")) {
        return std::strtoull(s, nullptr, 10);
    }
    return 20240915u;
}

std::string corpus_path(const std::string& name) {
    return std::string(NLPABS_CORPUS_DIR) + "/" + name;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::size_t pick(Rng& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

namespace {

const char* const kConsts[] = {"a", "b", "c"};

TermPtr random_ground_term(Rng& rng, std::size_t depth) {
    if (depth == 0 || pick(rng, 3) == 0) {
        return mk_fun(kConsts[pick(rng, 3)]);
    }
    if (pick(rng, 2) == 0) {
        return mk_fun("f", {random_ground_term(rng, depth - 1)});
    }
    return mk_fun("g", {random_ground_term(rng, depth - 1),
                        random_ground_term(rng, depth - 1)});
}

// Replaces random subterms of a ground skeleton by pool variables. When
// `record` is given, remembers which subterm each variable replaced; if a
// variable is reused for two different subterms, the recorded map is not a
// unifier any more and `consistent` is cleared.
TermPtr abstract_of(Rng& rng, const TermPtr& t,
                    const std::vector<VarName>& pool, Substitution* record,
                    bool* consistent) {
    if (pick(rng, 4) == 0) {
        VarName v = pool[pick(rng, pool.size())];
        if (record) {
            auto it = record->find(v);
            if (it == record->end()) {
                record->emplace(v, t);
            } else if (!term_eq(it->second, t)) {
                *consistent = false;
            }
        }
        return mk_var(v);
    }
    if (t->args.empty()) return t;
    std::vector<TermPtr> args;
    args.reserve(t->args.size());
    for (const auto& a : t->args) {
        args.push_back(abstract_of(rng, a, pool, record, consistent));
    }
    return mk_fun(t->name, args);
}

Atom shaped_atom(Rng& rng, const std::string& pred, std::size_t arity,
                 const std::vector<VarName>& pool, std::size_t depth) {
    Atom a{pred, {}};
    a.args.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i) {
        a.args.push_back(random_term(rng, pool, depth));
    }
    return a;
}

std::string fail_atoms(const std::string& law, const Atom& a, const Atom& b,
                       const std::string& detail) {
    return law + ": A = " + render_atom(a) + ", B = " + render_atom(b) +
           " -- " + detail;
}

} // namespace

TermPtr random_term(Rng& rng, const std::vector<VarName>& vars,
                    std::size_t depth) {
    if (depth == 0) {
        if (!vars.empty() && pick(rng, 2) == 0) {
            return mk_var(vars[pick(rng, vars.size())]);
        }
        return mk_fun(kConsts[pick(rng, 3)]);
    }
    switch (pick(rng, 6)) {
    case 0:
    case 1:
        if (!vars.empty()) return mk_var(vars[pick(rng, vars.size())]);
        [[fallthrough]];
    case 2:
        return mk_fun(kConsts[pick(rng, 3)]);
    case 3:
        return mk_fun("f", {random_term(rng, vars, depth - 1)});
    default:
        return mk_fun("g", {random_term(rng, vars, depth - 1),
                            random_term(rng, vars, depth - 1)});
    }
}

Atom random_atom(Rng& rng, const std::vector<VarName>& vars,
                 std::size_t depth) {
    static const char* const preds[] = {"p", "q", "r"};
    return shaped_atom(rng, preds[pick(rng, 3)], 1 + pick(rng, 3), vars,
                       depth);
}

Substitution random_subst(Rng& rng, const std::vector<VarName>& vars,
                          const std::vector<VarName>& rhs_vars,
                          std::size_t depth) {
    Substitution s;
    for (const auto& v : vars) {
        if (pick(rng, 2) != 0) continue;
        TermPtr t = random_term(rng, rhs_vars, depth);
        if (t->kind == Term::Kind::Var && t->name == v) continue;
        s.emplace(v, t);
    }
    return s;
}

bool subst_exact_eq(const Substitution& a, const Substitution& b) {
    if (a.size() != b.size()) return false;
    auto ia = a.begin();
    for (auto ib = b.begin(); ib != b.end(); ++ia, ++ib) {
        if (ia->first != ib->first || !term_eq(ia->second, ib->second)) {
            return false;
        }
    }
    return true;
}

std::string check_renaming_invariance(std::size_t trials, Rng& rng) {
    const std::vector<VarName> pool_a = {"X1", "X2", "X3"};
    const std::vector<std::vector<VarName>> pools_b = {
        {"Y1", "Y2", "Y3"},       // disjoint from A
        {"Y1", "Y2", "X1"},       // sharing one variable with A
        {"Y1", "X1", "X2"},       // sharing two
    };
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t arity = 1 + pick(rng, 3);
        Atom a = shaped_atom(rng, "p", arity, pool_a, 2);
        Atom b = shaped_atom(rng, "p", arity, pools_b[pick(rng, 3)], 2);

        std::vector<VarName> dom_vars = vars_of(b);
        if (pick(rng, 2) == 0) dom_vars.push_back("Z9"); // dom may exceed vars(B)
        std::size_t rot = dom_vars.empty() ? 0 : pick(rng, dom_vars.size());
        Substitution rho1;
        Substitution rho2;
        for (std::size_t i = 0; i < dom_vars.size(); ++i) {
            rho1.emplace(dom_vars[i], mk_var("R" + std::to_string(i)));
            rho2.emplace(dom_vars[i],
                         mk_var("S" + std::to_string((i + rot) % dom_vars.size())));
        }

        auto m1 = mgu(a, apply_subst(rho1, b));
        auto m2 = mgu(a, apply_subst(rho2, b));
        if (m1.has_value() != m2.has_value()) {
            return fail_atoms("renaming invariance (a)", a, b,
                              "unifiability depends on the renaming");
        }
        if (!m1) continue;

        VarSet vars_a = var_set_of(a);
        if (!subst_variant_eq(restrict_to(*m1, vars_a),
                              restrict_to(*m2, vars_a))) {
            return fail_atoms("renaming invariance (b)", a, b,
                              render_subst(restrict_to(*m1, vars_a)) +
                                  " !~ " +
                                  render_subst(restrict_to(*m2, vars_a)));
        }

        VarSet dom_set(dom_vars.begin(), dom_vars.end());
        Substitution c1 = restrict_to(compose(rho1, *m1), dom_set);
        Substitution c2 = restrict_to(compose(rho2, *m2), dom_set);
        if (!subst_variant_eq(c1, c2)) {
            return fail_atoms("renaming invariance (c)", a, b,
                              render_subst(c1) + " !~ " + render_subst(c2));
        }
    }
    return {};
}

std::string check_renaming_collapse(std::size_t trials, Rng& rng) {
    const std::vector<VarName> pool_a = {"X1", "X2", "X3"};
    const std::vector<VarName> pool_b = {"Y1", "Y2", "Y3"};
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t arity = 1 + pick(rng, 3);
        Atom a = shaped_atom(rng, "p", arity, pool_a, 2);
        Atom b = shaped_atom(rng, "p", arity, pool_b, 2);

        std::vector<VarName> dom_vars = vars_of(b);
        if (pick(rng, 2) == 0) dom_vars.push_back("Z9");
        Substitution rho;
        for (std::size_t i = 0; i < dom_vars.size(); ++i) {
            rho.emplace(dom_vars[i], mk_var("R" + std::to_string(i)));
        }

        auto direct = mgu(a, b);
        auto renamed = mgu(a, apply_subst(rho, b));
        if (direct.has_value() != renamed.has_value()) {
            return fail_atoms("renaming collapse", a, b,
                              "unifiability changed under renaming");
        }
        if (!direct) continue;

        VarSet vars_b = var_set_of(b);
        Substitution lhs = restrict_to(*direct, vars_b);
        Substitution rhs = restrict_to(compose(rho, *renamed), vars_b);
        if (!subst_variant_eq(lhs, rhs)) {
            return fail_atoms("renaming collapse", a, b,
                              render_subst(lhs) + " !~ " + render_subst(rhs));
        }
    }
    return {};
}

std::string check_composition_restriction(std::size_t trials, Rng& rng) {
    const std::vector<VarName> pool = {"X1", "X2", "X3", "Y1", "Y2"};
    for (std::size_t t = 0; t < trials; ++t) {
        Substitution t1 = random_subst(rng, pool, pool, 2);
        Substitution t2 = random_subst(rng, pool, pool, 2);
        VarSet v;
        for (const auto& x : pool) {
            if (pick(rng, 2) == 0) v.insert(x);
        }
        Substitution lhs = restrict_to(compose(t1, t2), v);
        Substitution rhs = restrict_to(compose(restrict_to(t1, v), t2), v);
        if (!subst_exact_eq(lhs, rhs)) {
            std::string vs;
            for (const auto& x : v) vs += (vs.empty() ? "" : ",") + x;
            return "composition restriction: t1 = " + render_subst(t1) +
                   ", t2 = " + render_subst(t2) + ", V = {" + vs + "} -- " +
                   render_subst(lhs) + " != " + render_subst(rhs);
        }
    }
    return {};
}

std::string check_staged_mgu(std::size_t trials, Rng& rng) {
    const std::vector<VarName> pool = {"X1", "X2", "X3", "Y1", "Y2"};
    auto random_equation = [&](Rng& r) -> Equation {
        if (pick(r, 4) == 0) { // unrelated sides, exercises failures
            return {random_term(r, pool, 2), random_term(r, pool, 2)};
        }
        TermPtr skeleton = random_ground_term(r, 3);
        return {abstract_of(r, skeleton, pool, nullptr, nullptr),
                abstract_of(r, skeleton, pool, nullptr, nullptr)};
    };
    auto render_eqs = [](const EquationList& eqs) {
        std::string out;
        for (const auto& [l, r] : eqs) {
            out += (out.empty() ? "" : ", ") + render_term(l) + " = " +
                   render_term(r);
        }
        return "{" + out + "}";
    };
    for (std::size_t t = 0; t < trials; ++t) {
        EquationList e1;
        EquationList e2;
        for (std::size_t i = 1 + pick(rng, 2); i > 0; --i) {
            e1.push_back(random_equation(rng));
        }
        for (std::size_t i = 1 + pick(rng, 2); i > 0; --i) {
            e2.push_back(random_equation(rng));
        }
        EquationList both = e1;
        both.insert(both.end(), e2.begin(), e2.end());
        auto whole = mgu(both);

        auto t1 = mgu(e1);
        if (!t1) {
            if (whole) {
                return "staged unification: E1 = " + render_eqs(e1) +
                       " fails alone but E1 u E2 = " + render_eqs(both) +
                       " unifies";
            }
            continue;
        }
        EquationList e2t1;
        e2t1.reserve(e2.size());
        for (const auto& [l, r] : e2) {
            e2t1.emplace_back(apply_subst(*t1, l), apply_subst(*t1, r));
        }
        auto t2 = mgu(e2t1);
        if (!t2) {
            if (whole) {
                return "staged unification: second stage fails on E1 = " +
                       render_eqs(e1) + ", E2 = " + render_eqs(e2) +
                       " but the union unifies";
            }
            continue;
        }
        if (!whole) {
            return "staged unification: stages succeed on E1 = " +
                   render_eqs(e1) + ", E2 = " + render_eqs(e2) +
                   " but the union fails";
        }
        Substitution staged = compose(*t1, *t2);
        if (!subst_variant_eq(staged, *whole)) {
            return "staged unification: E1 = " + render_eqs(e1) + ", E2 = " +
                   render_eqs(e2) + " -- " + render_subst(staged) + " !~ " +
                   render_subst(*whole);
        }
    }
    return {};
}

std::string check_mgu_contract(std::size_t trials, Rng& rng) {
    const std::vector<VarName> pool_l = {"X1", "X2", "X3"};
    const std::vector<VarName> pool_r = {"Y1", "Y2", "Y3"};
    for (std::size_t t = 0; t < trials; ++t) {
        std::size_t arity = 1 + pick(rng, 3);
        Atom skeleton{"p", {}};
        for (std::size_t i = 0; i < arity; ++i) {
            skeleton.args.push_back(random_ground_term(rng, 2));
        }
        Substitution known;
        bool consistent = true;
        Atom left{"p", {}};
        Atom right{"p", {}};
        for (const auto& arg : skeleton.args) {
            left.args.push_back(
                abstract_of(rng, arg, pool_l, &known, &consistent));
        }
        for (const auto& arg : skeleton.args) {
            right.args.push_back(
                abstract_of(rng, arg, pool_r, &known, &consistent));
        }

        auto m = mgu(left, right);
        if (consistent) {
            if (!atom_eq(apply_subst(known, left), apply_subst(known, right))) {
                return fail_atoms("unifier construction", left, right,
                                  "recorded bindings are not a unifier");
            }
            if (!m) {
                return fail_atoms("mgu completeness", left, right,
                                  "unifier " + render_subst(known) +
                                      " exists but mgu failed");
            }
            // Most general: the known unifier factors through the mgu.
            Substitution delta;
            std::vector<VarName> all = vars_of(left);
            for (const auto& v : vars_of(right)) all.push_back(v);
            for (const auto& v : all) {
                TermPtr mv = apply_subst(*m, mk_var(v));
                TermPtr kv = apply_subst(known, mk_var(v));
                if (!match_onto(mv, kv, delta)) {
                    return fail_atoms("mgu generality", left, right,
                                      render_subst(*m) +
                                          " does not subsume unifier " +
                                          render_subst(known));
                }
            }
        }
        if (m) {
            if (!atom_eq(apply_subst(*m, left), apply_subst(*m, right))) {
                return fail_atoms("mgu soundness", left, right,
                                  render_subst(*m) + " does not unify them");
            }
            if (!is_solved(*m)) {
                return fail_atoms("mgu solved form", left, right,
                                  render_subst(*m) + " is not in solved form");
            }
        }
    }
    return {};
}

std::vector<ValuePtr> jacobi_solve(const EquationSystem& sys,
                                   const AbstractDomain& dom) {
    std::size_t n = sys.size();
    std::vector<ValuePtr> x;
    x.reserve(n);
    std::size_t budget = 2;
    for (std::size_t k = 0; k < n; ++k) {
        x.push_back(dom.bot(sys.eqs[k].universe));
        budget += dom.height(sys.eqs[k].universe);
    }
    for (std::size_t sweep = 0; sweep <= budget; ++sweep) {
        std::vector<ValuePtr> y;
        y.reserve(n);
        bool changed = false;
        for (std::size_t k = 0; k < n; ++k) {
            y.push_back(evaluate(sys, dom, k, x));
            if (!dom.equal(y[k], x[k])) changed = true;
        }
        x.swap(y);
        if (!changed) return x;
    }
    throw std::logic_error("jacobi_solve: no fixpoint within sweep budget");
}

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(NLPABS_BIN) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
        res.output.append(buf, got);
    }
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

} // namespace nlpabs::testsupport
