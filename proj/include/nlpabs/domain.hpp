// Pluggable abstract domains.
//
// A domain supplies, for every finite variable universe V, a complete
// lattice of abstract substitutions together with an abstract unification
// operator. Concretization is exposed only as a membership test
// (gamma_contains), which is all the soundness checks need. Elements are
// immutable and carry their universe; lattice operations require equal
// universes and throw std::invalid_argument otherwise.

#pragma once

#include "nlpabs/subst.hpp"

#include <memory>
#include <string>

namespace nlpabs {

struct DomainValue {
    virtual ~DomainValue() = default;
};

using ValuePtr = std::shared_ptr<const DomainValue>;

class AbstractDomain {
public:
    virtual ~AbstractDomain() = default;

    virtual std::string name() const = 0;

    virtual ValuePtr bot(const VarSet& universe) const = 0;
    virtual ValuePtr top(const VarSet& universe) const = 0;
    // Abstraction of the empty substitution over the universe.
    virtual ValuePtr abstract_id(const VarSet& universe) const = 0;

    virtual VarSet universe_of(const ValuePtr& v) const = 0;

    virtual bool leq(const ValuePtr& a, const ValuePtr& b) const = 0;
    virtual ValuePtr join(const ValuePtr& a, const ValuePtr& b) const = 0;
    virtual ValuePtr meet(const ValuePtr& a, const ValuePtr& b) const = 0;

    bool equal(const ValuePtr& a, const ValuePtr& b) const {
        return leq(a, b) && leq(b, a);
    }

    // Abstract counterpart of open unification: a is an atom over theta's
    // universe, b an atom over sigma's universe; the result lives over
    // sigma's universe and over-approximates every concrete outcome.
    virtual ValuePtr abstract_unify(const Atom& a, const ValuePtr& theta,
                                    const Atom& b, const ValuePtr& sigma) const = 0;

    virtual bool gamma_contains(const ValuePtr& v, const Substitution& s) const = 0;

    // Length of the longest strictly ascending chain over the universe.
    virtual std::size_t height(const VarSet& universe) const = 0;

    // Interprets a goal annotation payload as an element over V.
    // Throws std::invalid_argument on malformed payloads.
    virtual ValuePtr parse_annotation(const TermPtr& payload,
                                      const VarSet& universe) const = 0;

    virtual std::string render(const ValuePtr& v) const = 0;
};

} // namespace nlpabs
