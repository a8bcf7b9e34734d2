#include "evidentia/mass.hpp"

#include <cmath>

namespace evidentia {

BodyOfEvidence::BodyOfEvidence(const Frame& frame, const std::vector<Entry>& entries)
    : frame_(frame) {
    for (const auto& [set, mass] : entries) {
        require_same_frame(set.frame(), frame_, "body entry");
        if (!(mass >= 0.0) || !std::isfinite(mass))
            throw InvalidArgument("mass of " + set.to_string() +
                                  " must be finite and non-negative");
        if (mass == 0.0) continue;
        masses_[set] += mass;
    }
}

BodyOfEvidence BodyOfEvidence::vacuous(const Frame& frame) {
    std::vector<Entry> entries{{FocalSet::full_set(frame), 1.0}};
    return BodyOfEvidence(frame, entries);
}

double BodyOfEvidence::mass_of(const FocalSet& s) const {
    require_same_frame(s.frame(), frame_, "mass_of");
    auto it = masses_.find(s);
    return it == masses_.end() ? 0.0 : it->second;
}

double BodyOfEvidence::empty_set_mass() const {
    return mass_of(FocalSet::empty_set(frame_));
}

double BodyOfEvidence::full_set_mass() const {
    return mass_of(FocalSet::full_set(frame_));
}

double BodyOfEvidence::total_mass() const {
    double total = 0.0;
    for (const auto& [set, mass] : masses_) total += mass;
    return total;
}

bool BodyOfEvidence::is_normalized() const {
    return std::abs(total_mass() - 1.0) <= kNormalizedTolerance;
}

bool BodyOfEvidence::is_closed_world() const {
    return masses_.empty() || !masses_.begin()->first.is_empty();
}

bool BodyOfEvidence::is_bayesian() const {
    if (masses_.empty()) return false;
    for (const auto& [set, mass] : masses_)
        if (!set.is_singleton() || set.is_full()) return false;
    return true;
}

BodyOfEvidence BodyOfEvidence::normalized() const {
    double total = total_mass();
    if (total <= 0.0)
        throw InvalidArgument("cannot normalize a body with zero total mass (no evidence)");
    if (std::abs(total - 1.0) <= kNormalizedTolerance) return *this;
    std::vector<Entry> scaled(masses_.begin(), masses_.end());
    for (auto& [set, mass] : scaled) mass /= total;
    return BodyOfEvidence(frame_, scaled);
}

WeightAssignment::WeightAssignment(std::vector<std::pair<FocalSet, double>> weights)
    : weights_(std::move(weights)) {
    for (const auto& [set, w] : weights_) {
        if (std::isnan(w) || w < 0.0)
            throw InvalidArgument("weight of evidence for " + set.to_string() +
                                  " must lie in [0, +inf]");
    }
}

BodyOfEvidence from_weights(const Frame& frame, const WeightAssignment& w) {
    std::vector<BodyOfEvidence::Entry> entries;
    double assigned = 0.0;
    for (const auto& [set, weight] : w.weights()) {
        require_same_frame(set.frame(), frame, "weight entry");
        double mass = -std::expm1(-weight); // 1 - e^{-w}, accurate for small w
        if (mass == 0.0) continue;
        entries.emplace_back(set, mass);
        assigned += mass;
    }
    double residual = std::max(0.0, 1.0 - assigned);
    if (residual > 0.0) entries.emplace_back(FocalSet::full_set(frame), residual);
    return BodyOfEvidence(frame, entries).normalized();
}

} // namespace evidentia
