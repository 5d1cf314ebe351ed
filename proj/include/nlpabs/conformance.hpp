// Sampled conformance checks for abstract domains.
//
// The suite verifies, over randomly sampled inputs, the contract every
// domain must honor: complete-lattice laws for leq/join/meet/bot/top,
// monotone concretization, soundness of the identity abstraction, and
// soundness plus monotonicity of abstract unification against the concrete
// open unifier. A domain-specific sampler supplies universes, elements,
// atoms and concrete members of an element's concretization.

#pragma once

#include "nlpabs/domain.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace nlpabs {

using Rng = std::mt19937_64;

class DomainSampler {
public:
    virtual ~DomainSampler() = default;

    virtual VarSet universe(Rng& rng) = 0;
    virtual ValuePtr element(const VarSet& universe, Rng& rng) = 0;
    virtual Atom atom(const VarSet& universe, Rng& rng) = 0;
    // A substitution contained in the element's concretization.
    virtual Substitution concretize(const ValuePtr& v, Rng& rng) = 0;
};

struct ConformanceCheck {
    std::string law;
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::string first_failure; // rendered inputs of the first failing trial
};

struct ConformanceReport {
    std::vector<ConformanceCheck> checks;

    bool passed() const;
    std::size_t total_failures() const;
    std::string summary() const; // one line per law
};

ConformanceReport conformance_suite(const AbstractDomain& domain,
                                    DomainSampler& sampler,
                                    std::size_t trials_per_law,
                                    std::uint64_t seed);

} // namespace nlpabs
