#ifndef EVIDENTIA_MASS_HPP
#define EVIDENTIA_MASS_HPP

#include <map>
#include <utility>
#include <vector>

#include "evidentia/frame.hpp"

namespace evidentia {

/// Masses that sum to 1 within this tolerance count as normalized.
inline constexpr double kNormalizedTolerance = 1e-9;

/// A body of evidence: a finite assignment of non-negative mass to
/// subsets of one frame. Mass on the empty set (fear that the truth lies
/// outside the frame) and on the whole frame (suspended judgement) are
/// first-class entries. Zero-mass sets are not stored; a set is focal
/// exactly when it appears here.
///
/// Bodies are immutable; every operation returns a new value.
class BodyOfEvidence {
public:
    using Entry = std::pair<FocalSet, double>;

    /// Merges duplicate sets by summing their masses and drops zero-mass
    /// entries. Rejects negative or non-finite masses and sets bound to a
    /// different frame. The result is *not* normalized automatically.
    BodyOfEvidence(const Frame& frame, const std::vector<Entry>& entries);

    /// Total ignorance: all mass on the whole frame. Identity element of
    /// every combination rule.
    static BodyOfEvidence vacuous(const Frame& frame);

    const Frame& frame() const { return frame_; }

    /// Stored mass of `s`, or 0 when `s` is not focal.
    double mass_of(const FocalSet& s) const;
    double empty_set_mass() const;
    double full_set_mass() const;
    double total_mass() const;

    /// Entries in canonical order (by bit pattern, empty set first).
    const std::map<FocalSet, double>& entries() const { return masses_; }
    std::size_t focal_count() const { return masses_.size(); }

    bool is_normalized() const;
    /// No mass on the empty set.
    bool is_closed_world() const;
    /// Every focal set is a singleton and neither the empty set nor the
    /// whole frame carries mass; the regime where the calculus collapses
    /// to probability.
    bool is_bayesian() const;

    /// Rescales all masses to sum to 1. A body already normalized within
    /// tolerance is returned unchanged, which makes normalization exactly
    /// idempotent. Throws when the total mass is zero.
    BodyOfEvidence normalized() const;

private:
    Frame frame_;
    std::map<FocalSet, double> masses_;
};

/// Empirical weights of evidence w in [0, +inf], one per set. A weight
/// feeds mass 1 - exp(-w): zero weight contributes nothing, infinite
/// weight contributes certainty.
class WeightAssignment {
public:
    WeightAssignment() = default;
    explicit WeightAssignment(std::vector<std::pair<FocalSet, double>> weights);

    const std::vector<std::pair<FocalSet, double>>& weights() const { return weights_; }

private:
    std::vector<std::pair<FocalSet, double>> weights_;
};

/// Turns weights of evidence into a normalized body: each set gets mass
/// 1 - exp(-w), whatever is left up to 1 goes to the whole frame, and the
/// result is normalized. With growing weights the per-set masses grow
/// while the frame's residual shrinks to zero.
BodyOfEvidence from_weights(const Frame& frame, const WeightAssignment& w);

} // namespace evidentia

#endif
