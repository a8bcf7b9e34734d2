#ifndef EVIDENTIA_IMPRECISE_HPP
#define EVIDENTIA_IMPRECISE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "evidentia/mass.hpp"

namespace evidentia {

/// A p-box: lower and upper step CDFs over a finite ordered domain,
/// bounding an imprecisely known distribution. Both CDFs are
/// non-decreasing and reach 1 at the last domain point; the lower CDF
/// never exceeds the upper one.
class PBox {
public:
    PBox(std::vector<std::string> domain, std::vector<double> lower, std::vector<double> upper);

    const std::vector<std::string>& domain() const { return domain_; }
    const std::vector<double>& lower() const { return lower_; }
    const std::vector<double>& upper() const { return upper_; }
    std::size_t size() const { return domain_.size(); }

private:
    std::vector<std::string> domain_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// A contiguous index range [lo, hi] of an ordered domain, inclusive.
struct Interval {
    std::size_t lo;
    std::size_t hi;
    auto operator<=>(const Interval&) const = default;
};

/// Single-valued probabilities on intervals of an ordered domain — the
/// set-based face of the same information a p-box carries on singletons.
/// Intervals may overlap; probabilities sum to 1. Duplicates are merged
/// and zero-mass entries dropped, so the stored list is canonical.
class IntervalMassList {
public:
    IntervalMassList(std::vector<std::string> domain,
                     std::vector<std::pair<Interval, double>> entries);

    const std::vector<std::string>& domain() const { return domain_; }
    const std::vector<std::pair<Interval, double>>& entries() const { return entries_; }

    /// The same assignment as a body of evidence over the ordered frame;
    /// every focal set is a contiguous interval.
    BodyOfEvidence to_body() const;

private:
    std::vector<std::string> domain_;
    std::vector<std::pair<Interval, double>> entries_;
};

/// Slices the probability axis at every breakpoint of either CDF; a slice
/// of height dp between levels maps to the interval reaching from the
/// first point where the upper CDF attains the slice to the first point
/// where the lower CDF does. The output is the canonical interval
/// representation of the p-box: masses sum to 1, and belief/plausibility
/// of each singleton on the converted body reproduce the per-point
/// probability bounds.
IntervalMassList pbox_to_intervals(const PBox& pb);

/// Inverse direction: the lower CDF at x accumulates intervals lying
/// wholly at or before x, the upper CDF accumulates intervals that have
/// begun by x. Composing pbox_to_intervals with this map is the identity
/// on p-boxes; the interval-side round trip is the identity on canonical
/// lists (distinct lists can share one p-box when singletons mix with
/// wider intervals).
PBox intervals_to_pbox(const IntervalMassList& im);

/// Diagnostics for imprecise probabilities given as per-singleton bounds
/// [p_lower, p_upper].
struct SubadditivityReport {
    double lower_sum;                // sum of lower bounds; must be <= 1
    double upper_sum;                // sum of upper bounds; must be >= 1
    bool lower_ok;
    bool upper_ok;
    std::optional<bool> duality_ok;  // p_upper(x) == 1 - p_lower(complement of x)
    bool passed() const { return lower_ok && upper_ok && duality_ok.value_or(true); }
};

/// Checks sub-additivity of the lower bounds, super-additivity of the
/// upper bounds and, when per-singleton complement bounds are supplied,
/// the duality between the two. Requires 0 <= lower <= upper <= 1 per
/// singleton.
SubadditivityReport subadditivity_report(
    const std::map<std::string, double>& lower, const std::map<std::string, double>& upper,
    const std::optional<std::map<std::string, double>>& complement_lower = std::nullopt);

} // namespace evidentia

#endif
