// Groundness domain.
//
// An element over universe V is the set of variables of V known to be bound
// to ground terms. The order is reverse inclusion: a bigger set claims more,
// so bot = V, top = {}, join = intersection, meet = union, and the empty
// substitution abstracts to {} (nothing known ground). Chains ascend by
// shrinking, so the lattice height is |V| + 1.

#pragma once

#include "nlpabs/domain.hpp"
#include "nlpabs/unify.hpp"

#include <optional>

namespace nlpabs {

struct GroundValue : DomainValue {
    VarSet universe;
    VarSet ground; // subset of universe

    GroundValue(VarSet universe, VarSet ground)
        : universe(std::move(universe)), ground(std::move(ground)) {}
};

// Variables forced ground by the solved equation set, seeded from known:
// known plus the variables of every rhs whose bound variable is known.
VarSet downwards(const Substitution& eqs, const VarSet& known);

// Bound variables whose rhs only uses known variables become known too.
VarSet upwards(const Substitution& eqs, const VarSet& known);

// Every intermediate of one abstract unification, for inspection.
struct GroundUnifyTrace {
    Substitution psi;               // renaming of theta's universe
    VarSet zeta;                    // renamed theta-set united with sigma-set
    std::optional<Substitution> e0; // mgu of the renamed atoms, if any
    VarSet down;
    VarSet up;
    VarSet result; // subset of sigma's universe
};

class GroundnessDomain : public AbstractDomain {
public:
    std::string name() const override { return "groundness"; }

    ValuePtr bot(const VarSet& universe) const override;
    ValuePtr top(const VarSet& universe) const override;
    ValuePtr abstract_id(const VarSet& universe) const override;
    VarSet universe_of(const ValuePtr& v) const override;
    bool leq(const ValuePtr& a, const ValuePtr& b) const override;
    ValuePtr join(const ValuePtr& a, const ValuePtr& b) const override;
    ValuePtr meet(const ValuePtr& a, const ValuePtr& b) const override;
    ValuePtr abstract_unify(const Atom& a, const ValuePtr& theta,
                            const Atom& b, const ValuePtr& sigma) const override;
    bool gamma_contains(const ValuePtr& v, const Substitution& s) const override;
    std::size_t height(const VarSet& universe) const override;
    ValuePtr parse_annotation(const TermPtr& payload,
                              const VarSet& universe) const override;
    std::string render(const ValuePtr& v) const override;

    // The full computation behind abstract_unify. psi_offset varies the
    // renaming; the result never depends on it.
    GroundUnifyTrace unify_trace(const Atom& a, const ValuePtr& theta,
                                 const Atom& b, const ValuePtr& sigma,
                                 std::size_t psi_offset = 0) const;

    static const GroundValue& as_ground(const ValuePtr& v);

private:
    ValuePtr make(VarSet universe, VarSet ground) const;
};

} // namespace nlpabs
