#ifndef EVIDENTIA_MEASURES_HPP
#define EVIDENTIA_MEASURES_HPP

#include "evidentia/mass.hpp"

namespace evidentia {

/// Comparisons between hypotheses treat differences within this
/// tolerance as ties and report them as equal.
inline constexpr double kComparisonTolerance = 1e-12;

/// Where a hypothesis came from. Unlike focal sets, a hypothesis is a
/// mental construct, not empirical evidence: a person may write one down
/// directly, or adopt a set that surfaced while combining evidence.
enum class HypothesisOrigin { human_supplied, induced_from_combination };

struct Hypothesis {
    FocalSet set;
    HypothesisOrigin origin = HypothesisOrigin::human_supplied;
};

/// Total mass committed to subsets of `h`. For the empty set and the
/// whole frame the open-world convention applies: Bel({}) is the mass on
/// the empty set and Bel(frame) the mass on the whole frame, not 0 and 1.
/// The body must be normalized.
double belief(const BodyOfEvidence& body, const FocalSet& h);
inline double belief(const BodyOfEvidence& body, const Hypothesis& h) {
    return belief(body, h.set);
}

/// Total mass not contradicting `h`: mass on every focal set meeting it.
/// Same open-world convention at the empty set and the whole frame.
double plausibility(const BodyOfEvidence& body, const FocalSet& h);
inline double plausibility(const BodyOfEvidence& body, const Hypothesis& h) {
    return plausibility(body, h.set);
}

/// Evidential entropy in bits, summed over the singletons of the frame:
///
///   H = - sum_i Pl(i) lg Pl(i) / exp(Pl(i) - Bel(i))
///       + sum_i (Pl(i) - Bel(i))
///
/// with 0 lg 0 = 0. On Bayesian bodies Pl = Bel on every singleton, the
/// second term vanishes and the first reduces to Shannon entropy. The
/// second term charges for ambiguity: evidence that reaches beyond each
/// singleton.
double entropy(const BodyOfEvidence& body);

/// The mass on the empty set: how strongly the combined evidence
/// suggests the truth lies outside the current frame.
double conflict_level(const BodyOfEvidence& body);

/// True when the conflict level strictly exceeds `threshold` — the cue
/// to stop combining and restructure the frame instead. The threshold is
/// caller configuration, in (0, 1) exclusive.
bool reframe_signal(const BodyOfEvidence& body, double threshold);

enum class Ordering { less, equal, greater };

struct HypothesisComparison {
    Ordering by_belief;
    Ordering by_plausibility;
};

/// Compares two hypotheses under the same body, by belief and by
/// plausibility. Ties within kComparisonTolerance are reported as equal,
/// never broken arbitrarily.
HypothesisComparison compare_hypotheses(const BodyOfEvidence& body, const Hypothesis& h1,
                                        const Hypothesis& h2);

/// A complement-closed family of candidate hypotheses inside a region of
/// the frame. Incoming evidence is never closed under complement; the
/// hypotheses a reasoner formulates may be, and this type carries that
/// closure: the smallest family containing the generators that is closed
/// under union and under complement relative to the region.
class HypothesisSpace {
public:
    static HypothesisSpace span(const FocalSet& region, const std::vector<FocalSet>& generators);

    const FocalSet& region() const { return region_; }
    /// Members in canonical order; always contains the empty set and the
    /// region itself.
    const std::vector<FocalSet>& members() const { return members_; }
    bool contains(const FocalSet& s) const;

    /// Checks an arbitrary family for closure under union and relative
    /// complement (the invariant span() guarantees by construction).
    static bool is_closed(const FocalSet& region, const std::vector<FocalSet>& family);

private:
    HypothesisSpace(FocalSet region, std::vector<FocalSet> members)
        : region_(std::move(region)), members_(std::move(members)) {}

    FocalSet region_;
    std::vector<FocalSet> members_;
};

} // namespace evidentia

#endif
