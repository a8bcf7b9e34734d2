#include "doctest.h"

#include <random>

#include "evidentia/combine.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace evidentia;

TEST_SUITE_BEGIN("combine");

namespace {

Frame zadeh_frame() { return Frame({"meningitis", "concussion", "tumor"}); }

BodyOfEvidence doctor_a() {
    Frame f = zadeh_frame();
    return BodyOfEvidence(f, {{FocalSet::of(f, {"meningitis"}), 0.99},
                              {FocalSet::of(f, {"tumor"}), 0.01}});
}

BodyOfEvidence doctor_b() {
    Frame f = zadeh_frame();
    return BodyOfEvidence(f, {{FocalSet::of(f, {"concussion"}), 0.99},
                              {FocalSet::of(f, {"tumor"}), 0.01}});
}

bool exactly_equal(const BodyOfEvidence& a, const BodyOfEvidence& b) {
    return a.entries() == b.entries();
}

} // namespace

TEST_CASE("Dempster's rule on the two-doctors example") {
    Frame f = zadeh_frame();
    CombinationReport report = dempster(doctor_a(), doctor_b());
    // All surviving support sits on the diagnosis both doctors barely
    // believed.
    CHECK(report.result.mass_of(FocalSet::of(f, {"tumor"})) == 1.0);
    CHECK(report.result.focal_count() == 1);
    CHECK(report.conflict_mass == doctest::Approx(0.9999).epsilon(1e-12));
}

TEST_CASE("Dempster's rule, hand-enumerated overlap") {
    Frame f({"a", "b", "c"});
    BodyOfEvidence a(f, {{FocalSet::of(f, {"a", "b"}), 0.6}, {FocalSet::full_set(f), 0.4}});
    BodyOfEvidence b(f, {{FocalSet::of(f, {"b", "c"}), 0.5}, {FocalSet::full_set(f), 0.5}});
    CombinationReport report = dempster(a, b);
    // Four products: 0.6*0.5 -> {b}, 0.6*0.5 -> {a,b}, 0.4*0.5 -> {b,c},
    // 0.4*0.5 -> frame. No conflict anywhere.
    CHECK(report.conflict_mass == 0.0);
    CHECK(report.result.mass_of(FocalSet::of(f, {"b"})) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(report.result.mass_of(FocalSet::of(f, {"a", "b"})) ==
          doctest::Approx(0.3).epsilon(1e-12));
    CHECK(report.result.mass_of(FocalSet::of(f, {"b", "c"})) ==
          doctest::Approx(0.2).epsilon(1e-12));
    CHECK(report.result.full_set_mass() == doctest::Approx(0.2).epsilon(1e-12));

    // Zero conflict and closed world: Smets' rule lands on the same body.
    CHECK(exactly_equal(smets(a, b).result, report.result));
}

TEST_CASE("Dempster's rule rejects what it cannot handle") {
    Frame f({"a", "b"});
    BodyOfEvidence a(f, {{FocalSet::of(f, {"a"}), 1.0}});
    BodyOfEvidence b(f, {{FocalSet::of(f, {"b"}), 1.0}});
    CHECK_THROWS_WITH_AS(dempster(a, b), "total conflict, Dempster undefined", TotalConflict);

    BodyOfEvidence open(f, {{FocalSet::empty_set(f), 0.5}, {FocalSet::of(f, {"a"}), 0.5}});
    CHECK_THROWS_AS(dempster(open, a), InvalidArgument); // points the caller at smets

    BodyOfEvidence unnormalized(f, {{FocalSet::of(f, {"a"}), 0.5}});
    CHECK_THROWS_AS(dempster(unnormalized, a), InvalidArgument);

    Frame g({"a", "c"});
    BodyOfEvidence other(g, {{FocalSet::of(g, {"a"}), 1.0}});
    CHECK_THROWS_AS(dempster(a, other), FrameMismatch);
}

TEST_CASE("Smets' rule keeps conflict on the empty set") {
    Frame f = zadeh_frame();
    CombinationReport report = smets(doctor_a(), doctor_b());
    CHECK(report.result.empty_set_mass() == doctest::Approx(0.9999).epsilon(1e-12));
    CHECK(report.result.mass_of(FocalSet::of(f, {"tumor"})) ==
          doctest::Approx(0.0001).epsilon(1e-12));
    CHECK(report.conflict_mass == report.result.empty_set_mass());

    // Two certainties about disjoint possibilities: all mass to the void.
    Frame g({"a", "b"});
    BodyOfEvidence a(g, {{FocalSet::of(g, {"a"}), 1.0}});
    BodyOfEvidence b(g, {{FocalSet::of(g, {"b"}), 1.0}});
    CHECK(smets(a, b).result.empty_set_mass() == 1.0);
}

TEST_CASE("Smets' rule accepts and propagates open-world mass") {
    Frame f({"a", "b"});
    BodyOfEvidence open(f, {{FocalSet::empty_set(f), 0.25},
                            {FocalSet::of(f, {"a"}), 0.5},
                            {FocalSet::full_set(f), 0.25}});
    BodyOfEvidence other(f, {{FocalSet::of(f, {"b"}), 0.5}, {FocalSet::full_set(f), 0.5}});
    CombinationReport report = smets(open, other);
    // Empty set absorbs its own row and the {a} x {b} clash:
    // 0.25*1 + 0.5*0.5 = 0.5.
    CHECK(report.result.empty_set_mass() == doctest::Approx(0.5).epsilon(1e-12));
    double sum = 0.0;
    for (const auto& [set, m] : report.result.entries()) sum += m;
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("masses are conserved by Smets' rule") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        Frame f = generators::small_frame(2 + trial % 3);
        generators::BodyOptions opts;
        opts.allow_empty_set = true;
        BodyOfEvidence a = generators::random_body(rng, f, opts);
        BodyOfEvidence b = generators::random_body(rng, f, opts);
        CombinationReport report = smets(a, b);
        double sum = 0.0;
        for (const auto& [set, m] : report.result.entries()) sum += m;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.result.is_normalized());
        CHECK(report.conflict_mass >= 0.0);
        CHECK(report.conflict_mass <= 1.0);
    }
}

TEST_CASE("PCR5 against the brute-force oracle on the two-doctors example") {
    Frame f = zadeh_frame();
    CombinationReport report = pcr5(doctor_a(), doctor_b());

    oracles::MassMap expected =
        oracles::pcr5(oracles::to_mass_map(doctor_a()), oracles::to_mass_map(doctor_b()));
    CHECK(oracles::max_difference(oracles::to_mass_map(report.result), expected) < 1e-12);

    // Frozen values, derived with the oracle: the two strong diagnoses
    // get their conflict back almost whole, the tumor keeps a sliver.
    CHECK(report.result.mass_of(FocalSet::of(f, {"meningitis"})) ==
          doctest::Approx(0.499851).epsilon(1e-9));
    CHECK(report.result.mass_of(FocalSet::of(f, {"concussion"})) ==
          doctest::Approx(0.499851).epsilon(1e-9));
    CHECK(report.result.mass_of(FocalSet::of(f, {"tumor"})) ==
          doctest::Approx(0.000298).epsilon(1e-9));
    CHECK(report.conflict_mass == doctest::Approx(0.9999).epsilon(1e-12));
}

TEST_CASE("PCR5 returns symmetric conflict whence it came") {
    Frame f({"a", "b"});
    BodyOfEvidence half(f, {{FocalSet::of(f, {"a"}), 0.5}, {FocalSet::of(f, {"b"}), 0.5}});
    CombinationReport report = pcr5(half, half);
    CHECK(report.result.mass_of(FocalSet::of(f, {"a"})) == 0.5);
    CHECK(report.result.mass_of(FocalSet::of(f, {"b"})) == 0.5);
    CHECK(report.conflict_mass == 0.5);
}

TEST_CASE("PCR5 matches the oracle on random closed-world bodies") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 300; ++trial) {
        Frame f = generators::small_frame(2 + trial % 3);
        BodyOfEvidence a = generators::random_body(rng, f);
        BodyOfEvidence b = generators::random_body(rng, f);
        oracles::MassMap expected =
            oracles::pcr5(oracles::to_mass_map(a), oracles::to_mass_map(b));
        CHECK(oracles::max_difference(oracles::to_mass_map(pcr5(a, b).result), expected) <
              1e-12);

        // The rule conserves mass without renormalizing.
        CombinationReport report = pcr5(a, b);
        double sum = 0.0;
        for (const auto& [set, m] : report.result.entries()) sum += m;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(report.result.is_normalized());
        CHECK(report.conflict_mass >= 0.0);
        CHECK(report.conflict_mass <= 1.0);
    }
}

TEST_CASE("PCR5 wants closed-world inputs") {
    Frame f({"a", "b"});
    BodyOfEvidence open(f, {{FocalSet::empty_set(f), 0.5}, {FocalSet::of(f, {"a"}), 0.5}});
    BodyOfEvidence plain(f, {{FocalSet::of(f, {"a"}), 1.0}});
    CHECK_THROWS_AS(pcr5(open, plain), InvalidArgument);
}

TEST_CASE("the vacuous body is a two-sided identity, exactly") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        Frame f = generators::small_frame(2 + trial % 3);
        BodyOfEvidence body = generators::random_body(rng, f);
        BodyOfEvidence vac = BodyOfEvidence::vacuous(f);
        for (Rule rule : {Rule::dempster, Rule::smets, Rule::pcr5}) {
            CHECK(exactly_equal(combine(rule, body, vac).result, body));
            CHECK(exactly_equal(combine(rule, vac, body).result, body));
            CHECK(combine(rule, body, vac).conflict_mass == 0.0);
        }
    }
    // Also with open-world mass, for the rule that accepts it.
    Frame f = generators::small_frame(3);
    generators::BodyOptions opts;
    opts.allow_empty_set = true;
    for (int trial = 0; trial < 50; ++trial) {
        BodyOfEvidence body = generators::random_body(rng, f, opts);
        CHECK(exactly_equal(smets(body, BodyOfEvidence::vacuous(f)).result, body));
        CHECK(exactly_equal(smets(BodyOfEvidence::vacuous(f), body).result, body));
    }
}

TEST_CASE("combination rules are commutative") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        Frame f = generators::small_frame(2 + trial % 3);
        BodyOfEvidence a = generators::random_body(rng, f);
        BodyOfEvidence b = generators::random_body(rng, f);
        for (Rule rule : {Rule::dempster, Rule::smets, Rule::pcr5}) {
            try {
                CombinationReport ab = combine(rule, a, b);
                CombinationReport ba = combine(rule, b, a);
                CHECK(oracles::max_difference(oracles::to_mass_map(ab.result),
                                              oracles::to_mass_map(ba.result)) < 1e-12);
                CHECK(ab.conflict_mass == doctest::Approx(ba.conflict_mass).epsilon(1e-12));
            } catch (const TotalConflict&) {
                // a totally conflicting pair must be refused either way round
                CHECK_THROWS_AS(combine(rule, b, a), TotalConflict);
            }
        }
    }
}

TEST_CASE("dempster and smets are associative; PCR5 is not") {
    std::mt19937 rng(47);
    int dempster_checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        Frame f = generators::small_frame(2 + trial % 3);
        BodyOfEvidence a = generators::random_body(rng, f);
        BodyOfEvidence b = generators::random_body(rng, f);
        BodyOfEvidence c = generators::random_body(rng, f);

        try {
            BodyOfEvidence left = dempster(dempster(a, b).result, c).result;
            BodyOfEvidence right = dempster(a, dempster(b, c).result).result;
            CHECK(oracles::max_difference(oracles::to_mass_map(left),
                                          oracles::to_mass_map(right)) < 1e-9);
            ++dempster_checked;
        } catch (const TotalConflict&) {
            // random triples may conflict totally; skip those
        }

        BodyOfEvidence sleft = smets(smets(a, b).result, c).result;
        BodyOfEvidence sright = smets(a, smets(b, c).result).result;
        CHECK(oracles::max_difference(oracles::to_mass_map(sleft),
                                      oracles::to_mass_map(sright)) < 1e-9);
    }
    CHECK(dempster_checked > 100);

    // A concrete PCR5 counterexample, kept on record: three Bayesian
    // bodies over {a, b} whose fold outcome depends on the grouping.
    Frame f({"a", "b"});
    BodyOfEvidence a(f, {{FocalSet::of(f, {"a"}), 0.6}, {FocalSet::of(f, {"b"}), 0.4}});
    BodyOfEvidence b(f, {{FocalSet::of(f, {"a"}), 0.3}, {FocalSet::of(f, {"b"}), 0.7}});
    BodyOfEvidence c(f, {{FocalSet::of(f, {"a"}), 0.1}, {FocalSet::of(f, {"b"}), 0.9}});
    BodyOfEvidence left = pcr5(pcr5(a, b).result, c).result;
    BodyOfEvidence right = pcr5(a, pcr5(b, c).result).result;
    double gap =
        oracles::max_difference(oracles::to_mass_map(left), oracles::to_mass_map(right));
    CHECK(gap > 1e-3); // grouping visibly changes the outcome
}

TEST_CASE("left folds over many bodies") {
    Frame f = zadeh_frame();
    std::vector<BodyOfEvidence> bodies{doctor_a(), doctor_b(), BodyOfEvidence::vacuous(f)};
    CombinationReport folded = combine_all(Rule::dempster, bodies);
    CombinationReport manual = dempster(dempster(doctor_a(), doctor_b()).result,
                                        BodyOfEvidence::vacuous(f));
    CHECK(exactly_equal(folded.result, manual.result));
    CHECK(folded.conflict_mass == manual.conflict_mass);

    std::vector<BodyOfEvidence> one{doctor_a()};
    CHECK_THROWS_AS(combine_all(Rule::dempster, one), InvalidArgument);
}

TEST_CASE("serial and parallel testimony reliabilities") {
    CHECK(serial_reliability(0.9, 1) == 0.9);
    CHECK(serial_reliability(0.9, 2) == doctest::Approx(0.81).epsilon(1e-15));
    CHECK(serial_reliability(1.0, 5) == 1.0);
    CHECK(parallel_reliability(0.9, 1) == doctest::Approx(0.9).epsilon(1e-15));
    CHECK(parallel_reliability(0.9, 2) == doctest::Approx(0.99).epsilon(1e-15));
    CHECK(parallel_reliability(0.0, 7) == 0.0);

    CHECK_THROWS_AS(serial_reliability(0.9, 0), InvalidArgument);
    CHECK_THROWS_AS(parallel_reliability(0.9, 0), InvalidArgument);
    CHECK_THROWS_AS(serial_reliability(1.5, 2), InvalidArgument);
    CHECK_THROWS_AS(parallel_reliability(-0.1, 2), InvalidArgument);
}

TEST_CASE("a chain never beats one testimony, a chorus never does worse") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> m_dist(0.0, 1.0);
    std::uniform_int_distribution<unsigned> n_dist(1, 12);
    for (int trial = 0; trial < 500; ++trial) {
        double m = m_dist(rng);
        unsigned n = n_dist(rng);
        CHECK(serial_reliability(m, n) <= m + 1e-15);
        CHECK(parallel_reliability(m, n) >= m - 1e-15);
    }
}

TEST_CASE("Bayesian conditioning") {
    Frame f({"h1", "h2"});
    BodyOfEvidence prior(f, {{FocalSet::of(f, {"h1"}), 0.5}, {FocalSet::of(f, {"h2"}), 0.5}});
    BodyOfEvidence evidence(f,
                            {{FocalSet::of(f, {"h1"}), 0.8}, {FocalSet::of(f, {"h2"}), 0.2}});
    BodyOfEvidence posterior = bayes_posterior(prior, evidence);
    CHECK(posterior.mass_of(FocalSet::of(f, {"h1"})) == doctest::Approx(0.8).epsilon(1e-15));
    CHECK(posterior.mass_of(FocalSet::of(f, {"h2"})) == doctest::Approx(0.2).epsilon(1e-15));

    // Uniform evidence changes nothing.
    BodyOfEvidence skew(f, {{FocalSet::of(f, {"h1"}), 0.3}, {FocalSet::of(f, {"h2"}), 0.7}});
    BodyOfEvidence uniform(f,
                           {{FocalSet::of(f, {"h1"}), 0.5}, {FocalSet::of(f, {"h2"}), 0.5}});
    BodyOfEvidence unchanged = bayes_posterior(skew, uniform);
    CHECK(unchanged.mass_of(FocalSet::of(f, {"h1"})) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(unchanged.mass_of(FocalSet::of(f, {"h2"})) == doctest::Approx(0.7).epsilon(1e-15));

    // Certainty is absorbing.
    BodyOfEvidence certain(f, {{FocalSet::of(f, {"h1"}), 1.0}});
    CHECK(bayes_posterior(certain, skew).mass_of(FocalSet::of(f, {"h1"})) == 1.0);

    BodyOfEvidence wide(f, {{FocalSet::full_set(f), 1.0}});
    CHECK_THROWS_AS(bayes_posterior(wide, evidence), InvalidArgument);

    BodyOfEvidence left(f, {{FocalSet::of(f, {"h1"}), 1.0}});
    BodyOfEvidence right(f, {{FocalSet::of(f, {"h2"}), 1.0}});
    CHECK_THROWS_AS(bayes_posterior(left, right), TotalConflict);
}

TEST_CASE("Dempster's rule collapses to Bayes on Bayesian bodies") {
    std::mt19937 rng(59);
    for (int trial = 0; trial < 400; ++trial) {
        Frame f = generators::small_frame(2 + trial % 3);
        BodyOfEvidence prior = generators::random_bayesian_body(rng, f);
        BodyOfEvidence evidence = generators::random_bayesian_body(rng, f);
        oracles::MassMap via_bayes = oracles::to_mass_map(bayes_posterior(prior, evidence));
        CHECK(oracles::max_difference(
                  oracles::to_mass_map(dempster(prior, evidence).result), via_bayes) < 1e-10);
        CHECK(oracles::max_difference(
                  oracles::to_mass_map(dempster(evidence, prior).result), via_bayes) < 1e-10);
    }
}

TEST_CASE("rule names round-trip") {
    for (Rule rule : {Rule::dempster, Rule::smets, Rule::pcr5})
        CHECK(rule_from_name(rule_name(rule)) == rule);
    CHECK_THROWS_AS(rule_from_name("yager"), InvalidArgument);
}

TEST_SUITE_END();
