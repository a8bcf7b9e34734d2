#include "evidentia/imprecise.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace evidentia {

namespace {

constexpr double kStepSlack = 1e-12;   // slack for comparing CDF levels
constexpr double kEndTolerance = 1e-9; // both CDFs must end at 1 within this

void validate_cdf(const std::vector<double>& values, const char* which) {
    double prev = 0.0;
    for (double v : values) {
        if (!std::isfinite(v) || v < -kStepSlack || v > 1.0 + kEndTolerance)
            throw InvalidArgument(std::string(which) + " CDF value out of [0, 1]");
        if (v < prev - kStepSlack)
            throw InvalidArgument(std::string(which) + " CDF must be non-decreasing");
        prev = v;
    }
    if (std::abs(values.back() - 1.0) > kEndTolerance)
        throw InvalidArgument(std::string(which) + " CDF must reach 1 at the last point");
}

} // namespace

PBox::PBox(std::vector<std::string> domain, std::vector<double> lower,
           std::vector<double> upper)
    : domain_(std::move(domain)), lower_(std::move(lower)), upper_(std::move(upper)) {
    Frame check(domain_); // validates distinct non-empty labels
    if (lower_.size() != domain_.size() || upper_.size() != domain_.size())
        throw InvalidArgument("p-box CDFs must have one value per domain point");
    validate_cdf(lower_, "lower");
    validate_cdf(upper_, "upper");
    for (std::size_t i = 0; i < domain_.size(); ++i)
        if (lower_[i] > upper_[i] + kStepSlack)
            throw InvalidArgument("lower CDF exceeds upper CDF at \"" + domain_[i] + "\"");
}

IntervalMassList::IntervalMassList(std::vector<std::string> domain,
                                   std::vector<std::pair<Interval, double>> entries)
    : domain_(std::move(domain)) {
    Frame check(domain_);
    std::map<Interval, double> merged;
    double total = 0.0;
    for (const auto& [iv, p] : entries) {
        if (iv.lo > iv.hi || iv.hi >= domain_.size())
            throw InvalidArgument("interval out of domain range");
        if (!(p >= 0.0) || !std::isfinite(p))
            throw InvalidArgument("interval probability must be finite and non-negative");
        if (p == 0.0) continue;
        merged[iv] += p;
        total += p;
    }
    if (std::abs(total - 1.0) > kNormalizedTolerance)
        throw InvalidArgument("interval probabilities must sum to 1");
    entries_.assign(merged.begin(), merged.end());
}

BodyOfEvidence IntervalMassList::to_body() const {
    Frame frame(domain_);
    std::vector<BodyOfEvidence::Entry> out;
    out.reserve(entries_.size());
    for (const auto& [iv, p] : entries_) {
        std::vector<std::string> members(domain_.begin() + static_cast<std::ptrdiff_t>(iv.lo),
                                         domain_.begin() + static_cast<std::ptrdiff_t>(iv.hi) + 1);
        out.emplace_back(FocalSet::of(frame, members), p);
    }
    return BodyOfEvidence(frame, out);
}

IntervalMassList pbox_to_intervals(const PBox& pb) {
    const auto& lower = pb.lower();
    const auto& upper = pb.upper();
    const std::size_t n = pb.size();

    // Cut the probability axis at every level either CDF attains. The
    // final cut is pinned to 1 so the slice heights telescope to exactly
    // the full probability.
    std::set<double> cut_set(lower.begin(), lower.end());
    cut_set.insert(upper.begin(), upper.end());
    cut_set.insert(1.0);

    // First domain index at which `values` reaches `level`.
    auto first_reaching = [n](const std::vector<double>& values, double level) {
        for (std::size_t i = 0; i < n; ++i)
            if (values[i] >= level - kStepSlack) return i;
        return n - 1;
    };

    std::vector<std::pair<Interval, double>> slices;
    double prev = 0.0;
    for (double cut : cut_set) {
        if (cut > 1.0) cut = 1.0;
        double height = cut - prev;
        if (height <= 0.0) continue;
        prev = cut;
        Interval iv{first_reaching(upper, cut), first_reaching(lower, cut)};
        if (!slices.empty() && slices.back().first == iv)
            slices.back().second += height;
        else
            slices.emplace_back(iv, height);
    }
    return IntervalMassList(pb.domain(), std::move(slices));
}

PBox intervals_to_pbox(const IntervalMassList& im) {
    const std::size_t n = im.domain().size();
    std::vector<double> lower(n, 0.0), upper(n, 0.0);
    for (const auto& [iv, p] : im.entries()) {
        for (std::size_t x = iv.hi; x < n; ++x) lower[x] += p; // wholly at or before x
        for (std::size_t x = iv.lo; x < n; ++x) upper[x] += p; // begun by x
    }
    return PBox(im.domain(), std::move(lower), std::move(upper));
}

SubadditivityReport subadditivity_report(
    const std::map<std::string, double>& lower, const std::map<std::string, double>& upper,
    const std::optional<std::map<std::string, double>>& complement_lower) {
    if (lower.empty())
        throw InvalidArgument("sub-additivity report needs at least one singleton");
    double lower_sum = 0.0, upper_sum = 0.0;
    for (const auto& [label, lo] : lower) {
        auto it = upper.find(label);
        if (it == upper.end())
            throw InvalidArgument("no upper bound for \"" + label + "\"");
        double hi = it->second;
        if (!(lo >= 0.0 && lo <= hi && hi <= 1.0))
            throw InvalidArgument("bounds for \"" + label +
                                  "\" must satisfy 0 <= lower <= upper <= 1");
        lower_sum += lo;
        upper_sum += hi;
    }
    if (upper.size() != lower.size())
        throw InvalidArgument("upper bounds name singletons missing from the lower bounds");

    SubadditivityReport report;
    report.lower_sum = lower_sum;
    report.upper_sum = upper_sum;
    report.lower_ok = lower_sum <= 1.0 + kEndTolerance;
    report.upper_ok = upper_sum >= 1.0 - kEndTolerance;
    if (complement_lower) {
        bool ok = true;
        for (const auto& [label, hi] : upper) {
            auto it = complement_lower->find(label);
            if (it == complement_lower->end())
                throw InvalidArgument("no complement bound for \"" + label + "\"");
            ok = ok && std::abs(hi - (1.0 - it->second)) <= kEndTolerance;
        }
        report.duality_ok = ok;
    }
    return report;
}

} // namespace evidentia
