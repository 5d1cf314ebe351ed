#include "nlpabs/conformance.hpp"

#include "nlpabs/unify.hpp"

#include <functional>
#include <sstream>

namespace nlpabs {

bool ConformanceReport::passed() const { return total_failures() == 0; }

std::size_t ConformanceReport::total_failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failures;
    return n;
}

std::string ConformanceReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.failures == 0 ? "pass" : "FAIL") << "  " << c.law << "  ("
           << c.trials << " trials";
        if (c.failures) {
            os << ", " << c.failures << " failures; first: " << c.first_failure;
        }
        os << ")\n";
    }
    return os.str();
}

namespace {

struct LawContext {
    const AbstractDomain& dom;
    DomainSampler& sampler;
    Rng& rng;
    FreshVarGen gen;

    VarSet v;
    ValuePtr a, b, c;

    void resample() {
        v = sampler.universe(rng);
        a = sampler.element(v, rng);
        b = sampler.element(v, rng);
        c = sampler.element(v, rng);
    }

    std::string render_abc() const {
        return "a=" + dom.render(a) + " b=" + dom.render(b) +
               " c=" + dom.render(c);
    }
};

using Law = std::function<bool(LawContext&, std::string&)>;

void run_law(ConformanceReport& report, LawContext& ctx, const std::string& name,
             std::size_t trials, const Law& law) {
    ConformanceCheck check;
    check.law = name;
    check.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        ctx.resample();
        std::string detail;
        if (!law(ctx, detail)) {
            if (check.failures == 0) check.first_failure = detail;
            check.failures += 1;
        }
    }
    report.checks.push_back(std::move(check));
}

} // namespace

ConformanceReport conformance_suite(const AbstractDomain& dom,
                                    DomainSampler& sampler,
                                    std::size_t trials_per_law,
                                    std::uint64_t seed) {
    Rng rng(seed);
    LawContext ctx{dom, sampler, rng, FreshVarGen{}, {}, nullptr, nullptr,
                   nullptr};
    ConformanceReport report;

    auto fail_abc = [](LawContext& c, std::string& d) {
        d = c.render_abc();
        return false;
    };

    run_law(report, ctx, "leq reflexive", trials_per_law,
            [&](LawContext& c, std::string& d) {
                return c.dom.leq(c.a, c.a) || fail_abc(c, d);
            });

    run_law(report, ctx, "leq transitive on ascending chains", trials_per_law,
            [&](LawContext& c, std::string& d) {
                ValuePtr mid = c.dom.join(c.a, c.b);
                ValuePtr high = c.dom.join(mid, c.c);
                return (c.dom.leq(c.a, mid) && c.dom.leq(mid, high) &&
                        c.dom.leq(c.a, high)) ||
                       fail_abc(c, d);
            });

    run_law(report, ctx, "join commutative", trials_per_law,
            [&](LawContext& c, std::string& d) {
                return c.dom.equal(c.dom.join(c.a, c.b), c.dom.join(c.b, c.a)) ||
                       fail_abc(c, d);
            });

    run_law(report, ctx, "join associative", trials_per_law,
            [&](LawContext& c, std::string& d) {
                ValuePtr l = c.dom.join(c.dom.join(c.a, c.b), c.c);
                ValuePtr r = c.dom.join(c.a, c.dom.join(c.b, c.c));
                return c.dom.equal(l, r) || fail_abc(c, d);
            });

    run_law(report, ctx, "join idempotent", trials_per_law,
            [&](LawContext& c, std::string& d) {
                return c.dom.equal(c.dom.join(c.a, c.a), c.a) || fail_abc(c, d);
            });

    run_law(report, ctx, "meet commutative", trials_per_law,
            [&](LawContext& c, std::string& d) {
                return c.dom.equal(c.dom.meet(c.a, c.b), c.dom.meet(c.b, c.a)) ||
                       fail_abc(c, d);
            });

    run_law(report, ctx, "meet associative", trials_per_law,
            [&](LawContext& c, std::string& d) {
                ValuePtr l = c.dom.meet(c.dom.meet(c.a, c.b), c.c);
                ValuePtr r = c.dom.meet(c.a, c.dom.meet(c.b, c.c));
                return c.dom.equal(l, r) || fail_abc(c, d);
            });

    run_law(report, ctx, "meet idempotent", trials_per_law,
            [&](LawContext& c, std::string& d) {
                return c.dom.equal(c.dom.meet(c.a, c.a), c.a) || fail_abc(c, d);
            });

    run_law(report, ctx, "absorption", trials_per_law,
            [&](LawContext& c, std::string& d) {
                bool ok =
                    c.dom.equal(c.dom.join(c.a, c.dom.meet(c.a, c.b)), c.a) &&
                    c.dom.equal(c.dom.meet(c.a, c.dom.join(c.a, c.b)), c.a);
                return ok || fail_abc(c, d);
            });

    run_law(report, ctx, "join is an upper bound", trials_per_law,
            [&](LawContext& c, std::string& d) {
                ValuePtr j = c.dom.join(c.a, c.b);
                return (c.dom.leq(c.a, j) && c.dom.leq(c.b, j)) ||
                       fail_abc(c, d);
            });

    run_law(report, ctx, "join is the least upper bound", trials_per_law,
            [&](LawContext& c, std::string& d) {
                if (!(c.dom.leq(c.a, c.c) && c.dom.leq(c.b, c.c))) return true;
                return c.dom.leq(c.dom.join(c.a, c.b), c.c) || fail_abc(c, d);
            });

    run_law(report, ctx, "meet is a lower bound", trials_per_law,
            [&](LawContext& c, std::string& d) {
                ValuePtr m = c.dom.meet(c.a, c.b);
                return (c.dom.leq(m, c.a) && c.dom.leq(m, c.b)) ||
                       fail_abc(c, d);
            });

    run_law(report, ctx, "meet is the greatest lower bound", trials_per_law,
            [&](LawContext& c, std::string& d) {
                if (!(c.dom.leq(c.c, c.a) && c.dom.leq(c.c, c.b))) return true;
                return c.dom.leq(c.c, c.dom.meet(c.a, c.b)) || fail_abc(c, d);
            });

    run_law(report, ctx, "bot and top bound everything", trials_per_law,
            [&](LawContext& c, std::string& d) {
                bool ok = c.dom.leq(c.dom.bot(c.v), c.a) &&
                          c.dom.leq(c.a, c.dom.top(c.v));
                return ok || fail_abc(c, d);
            });

    run_law(report, ctx, "bot and top are join/meet identities", trials_per_law,
            [&](LawContext& c, std::string& d) {
                bool ok = c.dom.equal(c.dom.join(c.a, c.dom.bot(c.v)), c.a) &&
                          c.dom.equal(c.dom.meet(c.a, c.dom.top(c.v)), c.a);
                return ok || fail_abc(c, d);
            });

    run_law(report, ctx, "concretization is monotone", trials_per_law,
            [&](LawContext& c, std::string& d) {
                ValuePtr bigger = c.dom.join(c.a, c.b);
                Substitution th = c.sampler.concretize(c.a, c.rng);
                bool ok = !c.dom.gamma_contains(c.a, th) ||
                          c.dom.gamma_contains(bigger, th);
                if (!ok) d = c.render_abc() + " theta=" + render_subst(th);
                return ok;
            });

    run_law(report, ctx, "identity element is sound", trials_per_law,
            [&](LawContext& c, std::string& d) {
                bool ok = c.dom.gamma_contains(c.dom.abstract_id(c.v), {});
                if (!ok) d = "universe size " + std::to_string(c.v.size());
                return ok;
            });

    run_law(report, ctx, "abstract unification is sound", trials_per_law,
            [&](LawContext& c, std::string& d) {
                VarSet u = c.sampler.universe(c.rng);
                ValuePtr th_abs = c.sampler.element(u, c.rng);
                Atom a = c.sampler.atom(u, c.rng);
                Atom b = c.sampler.atom(c.v, c.rng);
                Substitution th = c.sampler.concretize(th_abs, c.rng);
                Substitution om = c.sampler.concretize(c.a, c.rng);
                auto eta = unify_open(a, th, b, om, c.gen);
                if (!eta) return true;
                ValuePtr result = c.dom.abstract_unify(a, th_abs, b, c.a);
                bool ok = c.dom.gamma_contains(result, *eta);
                if (!ok) {
                    d = "A=" + render_atom(a) + " theta#=" + c.dom.render(th_abs) +
                        " theta=" + render_subst(th) + " B=" + render_atom(b) +
                        " sigma#=" + c.dom.render(c.a) +
                        " omega=" + render_subst(om) +
                        " eta=" + render_subst(*eta) +
                        " result=" + c.dom.render(result);
                }
                return ok;
            });

    run_law(report, ctx, "abstract unification is monotone", trials_per_law,
            [&](LawContext& c, std::string& d) {
                VarSet u = c.sampler.universe(c.rng);
                ValuePtr th1 = c.sampler.element(u, c.rng);
                ValuePtr th2 = c.dom.join(th1, c.sampler.element(u, c.rng));
                Atom a = c.sampler.atom(u, c.rng);
                Atom b = c.sampler.atom(c.v, c.rng);
                ValuePtr s1 = c.a;
                ValuePtr s2 = c.dom.join(c.a, c.b);
                bool ok = c.dom.leq(c.dom.abstract_unify(a, th1, b, s1),
                                    c.dom.abstract_unify(a, th2, b, s1)) &&
                          c.dom.leq(c.dom.abstract_unify(a, th1, b, s1),
                                    c.dom.abstract_unify(a, th1, b, s2));
                if (!ok) {
                    d = "A=" + render_atom(a) + " B=" + render_atom(b) +
                        " theta1=" + c.dom.render(th1) +
                        " theta2=" + c.dom.render(th2) +
                        " sigma1=" + c.dom.render(s1) +
                        " sigma2=" + c.dom.render(s2);
                }
                return ok;
            });

    return report;
}

} // namespace nlpabs
