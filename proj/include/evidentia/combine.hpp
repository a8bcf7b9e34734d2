#ifndef EVIDENTIA_COMBINE_HPP
#define EVIDENTIA_COMBINE_HPP

#include <span>
#include <string_view>

#include "evidentia/mass.hpp"

namespace evidentia {

enum class Rule { dempster, smets, pcr5 };

std::string_view rule_name(Rule rule);
Rule rule_from_name(std::string_view name);

/// Outcome of combining two bodies. `conflict_mass` is the total product
/// mass that fell on empty intersections: Dempster's rule renormalizes it
/// away, Smets' rule stores it on the empty set, PCR5 hands it back to
/// the conflicting sets.
struct CombinationReport {
    BodyOfEvidence result;
    double conflict_mass;
    Rule rule;
};

/// Dempster-Shafer combination: conjunctive consensus renormalized by the
/// non-conflicting mass. Requires normalized, closed-world inputs on one
/// frame. Throws TotalConflict when no intersection survives, and rejects
/// open-world inputs (use smets, which keeps conflict on the empty set).
CombinationReport dempster(const BodyOfEvidence& a, const BodyOfEvidence& b);

/// Smets' conjunctive rule for open worlds: the conjunctive consensus
/// with conflict accumulating on the empty set instead of being
/// redistributed. Accepts mass on the empty set in either input; the
/// output is normalized.
CombinationReport smets(const BodyOfEvidence& a, const BodyOfEvidence& b);

/// Proportional conflict redistribution rule no. 5: conjunctive consensus
/// plus, for every conflicting pair of focal sets, the conflicting
/// product split back onto the pair in proportion to their masses.
/// Closed-world inputs only; masses are conserved, no renormalization.
CombinationReport pcr5(const BodyOfEvidence& a, const BodyOfEvidence& b);

CombinationReport combine(Rule rule, const BodyOfEvidence& a, const BodyOfEvidence& b);

/// Left fold of `combine` over two or more bodies in the order given.
/// Dempster and Smets do not care about the order; PCR5 does, so the fold
/// order is part of the contract. The reported conflict mass is that of
/// the final fold step.
CombinationReport combine_all(Rule rule, std::span<const BodyOfEvidence> bodies);

/// Reliability of a chain of n testimonies of reliability m each: m^n.
double serial_reliability(double m, unsigned n);

/// Reliability of n independent parallel testimonies: 1 - (1-m)^n.
double parallel_reliability(double m, unsigned n);

/// Bayes' theorem as evidence combination: both bodies must be Bayesian
/// (all focal sets singletons, nothing on the empty set or the whole
/// frame). The posterior is proportional to the entrywise product.
/// Dempster's rule collapses to exactly this on Bayesian inputs, which
/// the test suite uses as an oracle equivalence.
BodyOfEvidence bayes_posterior(const BodyOfEvidence& prior, const BodyOfEvidence& evidence);

} // namespace evidentia

#endif
