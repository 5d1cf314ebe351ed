#include "nlpabs/groundness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nlpabs {

namespace {

VarSet set_union(const VarSet& a, const VarSet& b) {
    VarSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

VarSet set_intersect(const VarSet& a, const VarSet& b) {
    VarSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(out, out.end()));
    return out;
}

bool is_subset(const VarSet& a, const VarSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

} // namespace

VarSet downwards(const Substitution& eqs, const VarSet& known) {
    VarSet out = known;
    for (const auto& [x, rhs] : eqs) {
        if (known.count(x)) {
            VarSet vs = var_set_of(rhs);
            out.insert(vs.begin(), vs.end());
        }
    }
    return out;
}

VarSet upwards(const Substitution& eqs, const VarSet& known) {
    VarSet out = known;
    for (const auto& [x, rhs] : eqs) {
        if (is_subset(var_set_of(rhs), known)) out.insert(x);
    }
    return out;
}

const GroundValue& GroundnessDomain::as_ground(const ValuePtr& v) {
    const auto* g = dynamic_cast<const GroundValue*>(v.get());
    if (!g) throw std::invalid_argument("value is not a groundness element");
    return *g;
}

ValuePtr GroundnessDomain::make(VarSet universe, VarSet ground) const {
    return std::make_shared<GroundValue>(std::move(universe),
                                         std::move(ground));
}

ValuePtr GroundnessDomain::bot(const VarSet& universe) const {
    return make(universe, universe);
}

ValuePtr GroundnessDomain::top(const VarSet& universe) const {
    return make(universe, {});
}

ValuePtr GroundnessDomain::abstract_id(const VarSet& universe) const {
    return make(universe, {});
}

VarSet GroundnessDomain::universe_of(const ValuePtr& v) const {
    return as_ground(v).universe;
}

namespace {

void require_same_universe(const GroundValue& a, const GroundValue& b) {
    if (a.universe != b.universe) {
        throw std::invalid_argument(
            "groundness elements over different universes");
    }
}

} // namespace

bool GroundnessDomain::leq(const ValuePtr& a, const ValuePtr& b) const {
    const GroundValue& ga = as_ground(a);
    const GroundValue& gb = as_ground(b);
    require_same_universe(ga, gb);
    return is_subset(gb.ground, ga.ground);
}

ValuePtr GroundnessDomain::join(const ValuePtr& a, const ValuePtr& b) const {
    const GroundValue& ga = as_ground(a);
    const GroundValue& gb = as_ground(b);
    require_same_universe(ga, gb);
    return make(ga.universe, set_intersect(ga.ground, gb.ground));
}

ValuePtr GroundnessDomain::meet(const ValuePtr& a, const ValuePtr& b) const {
    const GroundValue& ga = as_ground(a);
    const GroundValue& gb = as_ground(b);
    require_same_universe(ga, gb);
    return make(ga.universe, set_union(ga.ground, gb.ground));
}

GroundUnifyTrace GroundnessDomain::unify_trace(const Atom& a,
                                               const ValuePtr& theta,
                                               const Atom& b,
                                               const ValuePtr& sigma,
                                               std::size_t psi_offset) const {
    const GroundValue& gt = as_ground(theta);
    const GroundValue& gs = as_ground(sigma);

    GroundUnifyTrace tr;

    // Rename theta's whole universe away from sigma's. The '#' character
    // cannot appear in a parsed variable, so these names are collision-free.
    std::size_t counter = psi_offset;
    for (const VarName& u : gt.universe) {
        tr.psi.emplace(u, mk_var("_#" + std::to_string(counter++)));
    }

    tr.zeta = gs.ground;
    for (const VarName& u : gt.ground) {
        tr.zeta.insert(apply_subst(tr.psi, mk_var(u))->name);
    }

    tr.e0 = mgu(apply_subst(tr.psi, a), b);
    if (!tr.e0) {
        tr.result = gs.universe; // failure has no successors: bottom
        return tr;
    }
    tr.down = downwards(*tr.e0, tr.zeta);
    tr.up = upwards(*tr.e0, tr.down);
    tr.result = set_intersect(tr.up, gs.universe);
    return tr;
}

ValuePtr GroundnessDomain::abstract_unify(const Atom& a, const ValuePtr& theta,
                                          const Atom& b,
                                          const ValuePtr& sigma) const {
    GroundUnifyTrace tr = unify_trace(a, theta, b, sigma);
    return make(as_ground(sigma).universe, std::move(tr.result));
}

bool GroundnessDomain::gamma_contains(const ValuePtr& v,
                                      const Substitution& s) const {
    const GroundValue& g = as_ground(v);
    return std::all_of(g.ground.begin(), g.ground.end(), [&](const VarName& x) {
        return is_ground(apply_subst(s, mk_var(x)));
    });
}

std::size_t GroundnessDomain::height(const VarSet& universe) const {
    return universe.size() + 1;
}

ValuePtr GroundnessDomain::parse_annotation(const TermPtr& payload,
                                            const VarSet& universe) const {
    VarSet ground;
    TermPtr t = payload;
    while (true) {
        if (t->kind == Term::Kind::Fun && t->name == list_nil_functor() &&
            t->args.empty()) {
            break;
        }
        if (t->kind != Term::Kind::Fun || t->name != list_cons_functor() ||
            t->args.size() != 2) {
            throw std::invalid_argument(
                "groundness annotation must be a list of variables, got " +
                render_term(payload));
        }
        const TermPtr& head = t->args[0];
        if (head->kind != Term::Kind::Var) {
            throw std::invalid_argument(
                "groundness annotation entries must be variables, got " +
                render_term(head));
        }
        if (!universe.count(head->name)) {
            throw std::invalid_argument("annotation variable " + head->name +
                                        " does not occur in the goal");
        }
        ground.insert(head->name);
        t = t->args[1];
    }
    return make(universe, std::move(ground));
}

std::string GroundnessDomain::render(const ValuePtr& v) const {
    const GroundValue& g = as_ground(v);
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const VarName& x : g.ground) {
        if (!first) os << ", ";
        first = false;
        os << x;
    }
    os << '}';
    return os.str();
}

} // namespace nlpabs
