#include "evidentia/combine.hpp"

#include <cmath>
#include <string>

namespace evidentia {

std::string_view rule_name(Rule rule) {
    switch (rule) {
        case Rule::dempster: return "dempster";
        case Rule::smets: return "smets";
        case Rule::pcr5: return "pcr5";
    }
    return "?";
}

Rule rule_from_name(std::string_view name) {
    if (name == "dempster") return Rule::dempster;
    if (name == "smets") return Rule::smets;
    if (name == "pcr5") return Rule::pcr5;
    throw InvalidArgument("unknown combination rule \"" + std::string(name) + "\"");
}

namespace {

void require_combinable(const BodyOfEvidence& a, const BodyOfEvidence& b,
                        std::string_view rule) {
    require_same_frame(a.frame(), b.frame(), rule);
    if (!a.is_normalized() || !b.is_normalized())
        throw InvalidArgument(std::string(rule) + ": inputs must be normalized");
}

void require_closed_world(const BodyOfEvidence& a, const BodyOfEvidence& b,
                          std::string_view rule) {
    if (!a.is_closed_world() || !b.is_closed_world())
        throw InvalidArgument(std::string(rule) +
                              ": open-world input (mass on the empty set); use smets, "
                              "which keeps conflict on the empty set");
}

BodyOfEvidence body_from(const Frame& frame, const std::map<FocalSet, double>& acc) {
    std::vector<BodyOfEvidence::Entry> entries(acc.begin(), acc.end());
    return BodyOfEvidence(frame, entries);
}

} // namespace

CombinationReport dempster(const BodyOfEvidence& a, const BodyOfEvidence& b) {
    require_combinable(a, b, "dempster");
    require_closed_world(a, b, "dempster");
    std::map<FocalSet, double> acc;
    double conflict = 0.0;
    double support = 0.0; // the denominator 1 - K, summed directly
    for (const auto& [x, mx] : a.entries()) {
        for (const auto& [y, my] : b.entries()) {
            FocalSet meet = x.intersect(y);
            double p = mx * my;
            if (meet.is_empty()) {
                conflict += p;
            } else {
                acc[meet] += p;
                support += p;
            }
        }
    }
    if (acc.empty() || support <= 0.0)
        throw TotalConflict("total conflict, Dempster undefined");
    for (auto& [set, mass] : acc) mass /= support;
    return {body_from(a.frame(), acc), conflict, Rule::dempster};
}

CombinationReport smets(const BodyOfEvidence& a, const BodyOfEvidence& b) {
    require_combinable(a, b, "smets");
    std::map<FocalSet, double> acc;
    for (const auto& [x, mx] : a.entries())
        for (const auto& [y, my] : b.entries())
            acc[x.intersect(y)] += mx * my;
    BodyOfEvidence result = body_from(a.frame(), acc).normalized();
    return {result, result.empty_set_mass(), Rule::smets};
}

CombinationReport pcr5(const BodyOfEvidence& a, const BodyOfEvidence& b) {
    require_combinable(a, b, "pcr5");
    require_closed_world(a, b, "pcr5");
    std::map<FocalSet, double> acc;
    double conflict = 0.0;
    for (const auto& [x, mx] : a.entries()) {
        for (const auto& [y, my] : b.entries()) {
            FocalSet meet = x.intersect(y);
            double p = mx * my;
            if (!meet.is_empty()) {
                acc[meet] += p;
                continue;
            }
            conflict += p;
            // Conflicting product goes back to the two sets, each taking
            // the share proportional to its own mass:
            //   x gets mx^2*my / (mx+my),  y gets my^2*mx / (mx+my).
            double denom = mx + my;
            if (denom <= 0.0) continue; // removable singularity, both masses 0
            acc[x] += mx * mx * my / denom;
            acc[y] += my * my * mx / denom;
        }
    }
    return {body_from(a.frame(), acc), conflict, Rule::pcr5};
}

CombinationReport combine(Rule rule, const BodyOfEvidence& a, const BodyOfEvidence& b) {
    switch (rule) {
        case Rule::dempster: return dempster(a, b);
        case Rule::smets: return smets(a, b);
        case Rule::pcr5: return pcr5(a, b);
    }
    throw InvalidArgument("unknown combination rule");
}

CombinationReport combine_all(Rule rule, std::span<const BodyOfEvidence> bodies) {
    if (bodies.size() < 2)
        throw InvalidArgument("combine_all needs at least two bodies");
    CombinationReport report = combine(rule, bodies[0], bodies[1]);
    for (std::size_t i = 2; i < bodies.size(); ++i)
        report = combine(rule, report.result, bodies[i]);
    return report;
}

double serial_reliability(double m, unsigned n) {
    if (!(m >= 0.0 && m <= 1.0))
        throw InvalidArgument("reliability must lie in [0, 1]");
    if (n == 0)
        throw InvalidArgument("a testimony chain needs at least one testimony");
    return std::pow(m, static_cast<double>(n));
}

double parallel_reliability(double m, unsigned n) {
    if (!(m >= 0.0 && m <= 1.0))
        throw InvalidArgument("reliability must lie in [0, 1]");
    if (n == 0)
        throw InvalidArgument("a testimony chain needs at least one testimony");
    return 1.0 - std::pow(1.0 - m, static_cast<double>(n));
}

BodyOfEvidence bayes_posterior(const BodyOfEvidence& prior, const BodyOfEvidence& evidence) {
    require_same_frame(prior.frame(), evidence.frame(), "bayes_posterior");
    if (!prior.is_bayesian() || !evidence.is_bayesian())
        throw InvalidArgument("bayes_posterior: bodies must be Bayesian "
                              "(all focal sets singletons)");
    if (!prior.is_normalized() || !evidence.is_normalized())
        throw InvalidArgument("bayes_posterior: inputs must be normalized");
    std::map<FocalSet, double> acc;
    double total = 0.0;
    for (const auto& [set, p] : prior.entries()) {
        double q = evidence.mass_of(set);
        if (q == 0.0) continue;
        acc[set] = p * q;
        total += p * q;
    }
    if (acc.empty() || total <= 0.0)
        throw TotalConflict("bayes_posterior: prior and evidence share no support");
    for (auto& [set, mass] : acc) mass /= total;
    return body_from(prior.frame(), acc);
}

} // namespace evidentia
