// Random input generation for conformance-checking the groundness domain.
#pragma once

#include "nlpabs/conformance.hpp"
#include "nlpabs/groundness.hpp"

namespace nlpabs {

// Samples universes from a small pool of named variables, elements as random
// subsets, atoms over the universe, and concrete substitutions drawn from an
// element's concretization (ground bindings for the claimed-ground variables,
// arbitrary bindings elsewhere).
class GroundnessSampler : public DomainSampler {
public:
    VarSet universe(Rng& rng) override;
    ValuePtr element(const VarSet& universe, Rng& rng) override;
    Atom atom(const VarSet& universe, Rng& rng) override;
    Substitution concretize(const ValuePtr& v, Rng& rng) override;

private:
    std::size_t ext_counter_ = 0; // names variables outside any universe
};

} // namespace nlpabs
