#include "evidentia/measures.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace evidentia {

namespace {

void require_evaluable(const BodyOfEvidence& body, const FocalSet& h, const char* what) {
    require_same_frame(body.frame(), h.frame(), what);
    if (!body.is_normalized())
        throw InvalidArgument(std::string(what) + ": body must be normalized");
}

} // namespace

double belief(const BodyOfEvidence& body, const FocalSet& h) {
    require_evaluable(body, h, "belief");
    if (h.is_empty()) return body.empty_set_mass();
    if (h.is_full()) return body.full_set_mass();
    double sum = 0.0;
    for (const auto& [set, mass] : body.entries())
        if (!set.is_empty() && set.is_subset_of(h)) sum += mass;
    return sum;
}

double plausibility(const BodyOfEvidence& body, const FocalSet& h) {
    require_evaluable(body, h, "plausibility");
    if (h.is_empty()) return body.empty_set_mass();
    if (h.is_full()) return body.full_set_mass();
    double sum = 0.0;
    for (const auto& [set, mass] : body.entries())
        if (set.intersects(h)) sum += mass;
    return sum;
}

double entropy(const BodyOfEvidence& body) {
    if (!body.is_normalized())
        throw InvalidArgument("entropy: body must be normalized");
    const Frame& frame = body.frame();
    // Per-singleton terms are accumulated in value order, not frame
    // order, so relabelling the frame cannot change the result.
    std::vector<double> terms;
    terms.reserve(2 * frame.size());
    for (std::size_t i = 0; i < frame.size(); ++i) {
        FocalSet singleton = FocalSet::singleton(frame, i);
        double bel = belief(body, singleton);
        double pl = plausibility(body, singleton);
        if (pl > 0.0) terms.push_back(-pl * std::log2(pl) / std::exp(pl - bel));
        terms.push_back(pl - bel);
    }
    std::sort(terms.begin(), terms.end());
    double h = 0.0;
    for (double t : terms) h += t;
    return h;
}

double conflict_level(const BodyOfEvidence& body) {
    if (!body.is_normalized())
        throw InvalidArgument("conflict_level: body must be normalized");
    return body.empty_set_mass();
}

bool reframe_signal(const BodyOfEvidence& body, double threshold) {
    if (!(threshold > 0.0 && threshold < 1.0))
        throw InvalidArgument("reframe threshold must lie strictly between 0 and 1");
    return conflict_level(body) > threshold;
}

namespace {

Ordering compare_with_tolerance(double a, double b) {
    if (std::abs(a - b) <= kComparisonTolerance) return Ordering::equal;
    return a < b ? Ordering::less : Ordering::greater;
}

} // namespace

HypothesisComparison compare_hypotheses(const BodyOfEvidence& body, const Hypothesis& h1,
                                        const Hypothesis& h2) {
    return {compare_with_tolerance(belief(body, h1), belief(body, h2)),
            compare_with_tolerance(plausibility(body, h1), plausibility(body, h2))};
}

HypothesisSpace HypothesisSpace::span(const FocalSet& region,
                                      const std::vector<FocalSet>& generators) {
    const Frame& frame = region.frame();
    std::set<FocalSet> family;
    family.insert(FocalSet::empty_set(frame));
    family.insert(region);
    for (const auto& g : generators) {
        require_same_frame(g.frame(), frame, "hypothesis space generator");
        if (!g.is_subset_of(region))
            throw InvalidArgument("generator " + g.to_string() +
                                  " reaches outside the hypothesis region");
        family.insert(g);
    }
    // Close under relative complement and union. Intersection follows by
    // De Morgan, so this yields the full generated algebra.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<FocalSet> current(family.begin(), family.end());
        for (const auto& a : current)
            grew |= family.insert(region.intersect(a.complement())).second;
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j)
                grew |= family.insert(current[i].unite(current[j])).second;
    }
    return HypothesisSpace(region, std::vector<FocalSet>(family.begin(), family.end()));
}

bool HypothesisSpace::contains(const FocalSet& s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

bool HypothesisSpace::is_closed(const FocalSet& region, const std::vector<FocalSet>& family) {
    std::set<FocalSet> set(family.begin(), family.end());
    for (const auto& a : family) {
        if (!a.is_subset_of(region)) return false;
        if (!set.count(region.intersect(a.complement()))) return false;
        for (const auto& b : family)
            if (!set.count(a.unite(b))) return false;
    }
    return true;
}

} // namespace evidentia
