#include "nlpabs/groundness_sampler.hpp"

#include <array>
#include <vector>

namespace nlpabs {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return rng() % n; }

const std::array<VarName, 10> kPool = {"K", "L", "M", "N", "U",
                                       "V", "W", "X", "Y", "Z"};

TermPtr random_ground_term(Rng& rng, std::size_t depth) {
    static const std::array<std::string, 3> consts = {"a", "b", "c"};
    if (depth == 0 || pick(rng, 3) == 0) {
        return mk_fun(consts[pick(rng, consts.size())], {});
    }
    if (pick(rng, 2) == 0) {
        return mk_fun("f", {random_ground_term(rng, depth - 1)});
    }
    return mk_fun("g", {random_ground_term(rng, depth - 1),
                        random_ground_term(rng, depth - 1)});
}

TermPtr random_term(Rng& rng, const std::vector<VarName>& vars,
                    std::size_t depth) {
    if (!vars.empty() && pick(rng, 3) == 0) {
        return mk_var(vars[pick(rng, vars.size())]);
    }
    if (depth == 0 || pick(rng, 3) == 0) {
        return random_ground_term(rng, 0);
    }
    if (pick(rng, 2) == 0) {
        return mk_fun("f", {random_term(rng, vars, depth - 1)});
    }
    return mk_fun("g", {random_term(rng, vars, depth - 1),
                        random_term(rng, vars, depth - 1)});
}

} // namespace

VarSet GroundnessSampler::universe(Rng& rng) {
    std::size_t size = 1 + pick(rng, 5);
    VarSet out;
    while (out.size() < size) out.insert(kPool[pick(rng, kPool.size())]);
    return out;
}

ValuePtr GroundnessSampler::element(const VarSet& universe, Rng& rng) {
    VarSet ground;
    for (const auto& x : universe) {
        if (pick(rng, 2) == 0) ground.insert(x);
    }
    return std::make_shared<GroundValue>(universe, std::move(ground));
}

Atom GroundnessSampler::atom(const VarSet& universe, Rng& rng) {
    static const std::array<std::string, 3> preds = {"p", "q", "r"};
    std::vector<VarName> vars(universe.begin(), universe.end());
    std::size_t arity = 1 + pick(rng, 3);
    std::vector<TermPtr> args;
    for (std::size_t k = 0; k < arity; ++k) {
        args.push_back(random_term(rng, vars, 2));
    }
    return Atom{preds[pick(rng, preds.size())], std::move(args)};
}

Substitution GroundnessSampler::concretize(const ValuePtr& v, Rng& rng) {
    const auto& g = GroundnessDomain::as_ground(v);
    Substitution s;
    for (const auto& x : g.universe) {
        if (g.ground.count(x)) {
            s.emplace(x, random_ground_term(rng, 2));
            continue;
        }
        switch (pick(rng, 3)) {
        case 0: // left unbound
            break;
        case 1: // bound to a ground term anyway
            s.emplace(x, random_ground_term(rng, 1));
            break;
        default: { // bound to a term with a variable outside the universe
            VarName ext = "Ext" + std::to_string(ext_counter_++);
            s.emplace(x, mk_fun("f", {mk_var(ext)}));
            break;
        }
        }
    }
    return s;
}

} // namespace nlpabs
