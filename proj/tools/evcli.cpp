// Batch command-line surface for the evidentia library: load bodies of
// evidence from JSON, combine them, evaluate measures, convert p-boxes,
// test hypergraphs for acyclicity, and run the built-in demo scenarios.
//
// Exit codes: 0 success, 1 input error, 2 domain error (total conflict,
// or a demo whose self-check fails).

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "evidentia/combine.hpp"
#include "evidentia/imprecise.hpp"
#include "evidentia/json_io.hpp"
#include "evidentia/measures.hpp"

namespace {

using namespace evidentia;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitDomainError = 2;

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void print_body_table(const BodyOfEvidence& body) {
    std::size_t width = 4;
    for (const auto& [set, mass] : body.entries())
        width = std::max(width, set.to_string().size());
    std::printf("%-*s  %s\n", static_cast<int>(width), "set", "mass");
    for (const auto& [set, mass] : body.entries())
        std::printf("%-*s  %s\n", static_cast<int>(width), set.to_string().c_str(),
                    format_value(mass).c_str());
}

// Bodies are normalized on load; combination rules and measures are
// defined on normalized masses.
BodyOfEvidence load_normalized(const std::string& path) {
    return load_body(path).normalized();
}

int cmd_combine(const std::vector<std::string>& files, const std::string& rule_name,
                const std::string& format) {
    std::vector<BodyOfEvidence> bodies;
    bodies.reserve(files.size());
    for (const auto& f : files) bodies.push_back(load_normalized(f));
    CombinationReport report = combine_all(rule_from_name(rule_name), bodies);
    if (format == "table") {
        std::printf("rule      %s\n", std::string(rule_name).c_str());
        std::printf("conflict  %s\n", format_value(report.conflict_mass).c_str());
        print_body_table(report.result);
    } else {
        std::cout << "{\"rule\": \"" << rule_name
                  << "\", \"conflict_mass\": " << format_number(report.conflict_mass)
                  << ", \"result\": " << body_to_json(report.result) << "}\n";
    }
    return kExitOk;
}

FocalSet parse_hypothesis(const Frame& frame, const std::string& text) {
    if (text == "*") return FocalSet::full_set(frame);
    if (text == "-" || text.empty()) return FocalSet::empty_set(frame);
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        labels.push_back(text.substr(start, comma - start));
        start = comma + 1;
    }
    return FocalSet::of(frame, labels);
}

int cmd_measure(const std::string& file, const std::string& what,
                const std::string& hypothesis, double threshold) {
    BodyOfEvidence body = load_normalized(file);
    double value = 0.0;
    if (what == "bel" || what == "pl") {
        FocalSet h = parse_hypothesis(body.frame(), hypothesis);
        value = what == "bel" ? belief(body, h) : plausibility(body, h);
    } else if (what == "entropy") {
        value = entropy(body);
    } else if (what == "conflict") {
        value = conflict_level(body);
    } else if (what == "reframe") {
        std::cout << (reframe_signal(body, threshold) ? "true" : "false") << '\n';
        return kExitOk;
    }
    std::cout << format_value(value) << '\n';
    return kExitOk;
}

int cmd_pbox(const std::string& file, const std::string& format) {
    PBox pb = load_pbox(file);
    IntervalMassList intervals = pbox_to_intervals(pb);
    if (format == "table") {
        print_body_table(intervals.to_body());
    } else {
        std::cout << "{\"intervals\": " << intervals_to_json(intervals)
                  << ", \"body\": " << body_to_json(intervals.to_body()) << "}\n";
    }
    return kExitOk;
}

int cmd_hypertree(const std::string& file, const std::string& format) {
    Hypergraph h = load_hypergraph(file);
    bool verdict = is_hypertree(h);
    if (format == "table")
        std::printf("hypertree  %s\n", verdict ? "true" : "false");
    else
        std::cout << "{\"hypertree\": " << (verdict ? "true" : "false") << "}\n";
    return kExitOk;
}

// ---------------------------------------------------------------------
// Demo scenarios. Each prints a transcript, checks the expected numbers
// and reports PASS/FAIL; a failing check exits with the domain error
// code.

class DemoCheck {
public:
    void expect(const std::string& name, bool ok) {
        std::printf("  [%s] %s\n", ok ? "PASS" : "FAIL", name.c_str());
        all_ok_ = all_ok_ && ok;
    }
    void expect_near(const std::string& name, double got, double want, double tol) {
        bool ok = std::abs(got - want) <= tol;
        std::printf("  [%s] %s: got %s, want %s\n", ok ? "PASS" : "FAIL", name.c_str(),
                    format_value(got).c_str(), format_value(want).c_str());
        all_ok_ = all_ok_ && ok;
    }
    int finish() const {
        std::printf("%s\n", all_ok_ ? "PASS" : "FAIL");
        return all_ok_ ? kExitOk : kExitDomainError;
    }

private:
    bool all_ok_ = true;
};

int demo_zadeh() {
    std::printf("Zadeh's two-doctors example\n");
    Frame frame({"meningitis", "concussion", "tumor"});
    BodyOfEvidence doctor_a(frame, {{FocalSet::of(frame, {"meningitis"}), 0.99},
                                    {FocalSet::of(frame, {"tumor"}), 0.01}});
    BodyOfEvidence doctor_b(frame, {{FocalSet::of(frame, {"concussion"}), 0.99},
                                    {FocalSet::of(frame, {"tumor"}), 0.01}});
    std::printf("doctor A: %s\n", body_to_json(doctor_a).c_str());
    std::printf("doctor B: %s\n", body_to_json(doctor_b).c_str());

    DemoCheck check;

    CombinationReport ds = dempster(doctor_a, doctor_b);
    std::printf("dempster: %s\n", body_to_json(ds.result).c_str());
    check.expect_near("dempster Bel({tumor})",
                      belief(ds.result, FocalSet::of(frame, {"tumor"})), 1.0, 1e-12);
    check.expect_near("dempster conflict mass", ds.conflict_mass, 0.9999, 1e-12);

    CombinationReport open_world = smets(doctor_a, doctor_b);
    std::printf("smets:    %s\n", body_to_json(open_world.result).c_str());
    check.expect_near("smets m({})", open_world.result.empty_set_mass(), 0.9999, 1e-12);
    check.expect_near("smets m({tumor})",
                      open_world.result.mass_of(FocalSet::of(frame, {"tumor"})), 0.0001,
                      1e-12);

    CombinationReport redistributed = pcr5(doctor_a, doctor_b);
    std::printf("pcr5:     %s\n", body_to_json(redistributed.result).c_str());
    check.expect_near("pcr5 m({meningitis})",
                      redistributed.result.mass_of(FocalSet::of(frame, {"meningitis"})),
                      0.499851, 1e-9);
    check.expect_near("pcr5 m({concussion})",
                      redistributed.result.mass_of(FocalSet::of(frame, {"concussion"})),
                      0.499851, 1e-9);
    check.expect_near("pcr5 m({tumor})",
                      redistributed.result.mass_of(FocalSet::of(frame, {"tumor"})), 0.000298,
                      1e-9);
    return check.finish();
}

int demo_fig3() {
    std::printf("Hypergraph acyclicity and frame coarsening\n");
    Frame frame({"alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta"});
    auto edge = [&frame](std::vector<std::string> labels) {
        return FocalSet::of(frame, labels);
    };
    Hypergraph cyclic(frame, {edge({"alpha", "eta"}), edge({"beta", "zeta"}),
                              edge({"delta", "theta"}), edge({"epsilon", "zeta"}),
                              edge({"beta", "gamma", "delta"}),
                              edge({"delta", "epsilon", "eta"})});
    // The same possibility sets after coarsening: the two 2-element edges
    // {beta,zeta} and {epsilon,zeta} replaced by {beta,delta,epsilon} and
    // {beta,epsilon,zeta}.
    Hypergraph acyclic(frame, {edge({"alpha", "eta"}), edge({"delta", "theta"}),
                               edge({"beta", "gamma", "delta"}),
                               edge({"delta", "epsilon", "eta"}),
                               edge({"beta", "delta", "epsilon"}),
                               edge({"beta", "epsilon", "zeta"})});
    // Variant reading without the {delta,epsilon,eta} edge.
    Hypergraph acyclic_variant(frame, {edge({"alpha", "eta"}), edge({"delta", "theta"}),
                                       edge({"beta", "gamma", "delta"}),
                                       edge({"beta", "delta", "epsilon"}),
                                       edge({"beta", "epsilon", "zeta"})});

    DemoCheck check;
    std::mt19937 rng(20240229);
    bool left_stable = true, right_stable = true, variant_stable = true;
    for (int i = 0; i < 32; ++i) {
        left_stable = left_stable && !is_hypertree(cyclic, rng);
        right_stable = right_stable && is_hypertree(acyclic, rng);
        variant_stable = variant_stable && is_hypertree(acyclic_variant, rng);
    }
    std::printf("left : %s\n", is_hypertree(cyclic) ? "hypertree" : "cyclic");
    std::printf("right: %s\n", is_hypertree(acyclic) ? "hypertree" : "cyclic");
    check.expect("left edge set is cyclic under all reduction orders", left_stable);
    check.expect("right edge set is a hypertree under all reduction orders", right_stable);
    check.expect("right edge set variant is also a hypertree", variant_stable);
    return check.finish();
}

int demo_die() {
    std::printf("A die of doubtful fairness: p in [1/7, 1/5] per face\n");
    std::map<std::string, double> lower, upper;
    for (const char* face : {"1", "2", "3", "4", "5", "6"}) {
        lower[face] = 1.0 / 7.0;
        upper[face] = 1.0 / 5.0;
    }
    SubadditivityReport report = subadditivity_report(lower, upper);
    std::printf("sum of lower bounds: %s\n", format_value(report.lower_sum).c_str());
    std::printf("sum of upper bounds: %s\n", format_value(report.upper_sum).c_str());

    DemoCheck check;
    check.expect_near("sum of lower bounds is 6/7", report.lower_sum, 6.0 / 7.0, 1e-12);
    check.expect_near("sum of upper bounds is 6/5", report.upper_sum, 6.0 / 5.0, 1e-12);
    check.expect("lower bounds are sub-additive", report.lower_ok);
    check.expect("upper bounds are super-additive", report.upper_ok);
    return check.finish();
}

int cmd_demo(const std::string& name) {
    if (name == "zadeh") return demo_zadeh();
    if (name == "fig3") return demo_fig3();
    if (name == "die") return demo_die();
    std::cerr << "error: unknown demo \"" << name << "\" (try zadeh, fig3, die)\n";
    return kExitInputError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"evidentia: belief-functions calculator for open worlds"};
    app.require_subcommand(1);

    std::string rule = "dempster";
    std::string format = "json";
    std::string measure_name;
    std::string hypothesis;
    std::string file;
    std::vector<std::string> files;
    std::string demo_name;
    double threshold = 0.5;

    auto* combine_cmd = app.add_subcommand("combine", "Combine two or more bodies of evidence");
    combine_cmd->add_option("files", files, "Body-of-evidence JSON files, fold order")
        ->required()
        ->expected(2, -1);
    combine_cmd->add_option("--rule", rule, "Combination rule: dempster, smets or pcr5")
        ->check(CLI::IsMember({"dempster", "smets", "pcr5"}));
    combine_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));

    auto* measure_cmd = app.add_subcommand("measure", "Evaluate a measure on one body");
    measure_cmd->add_option("file", file, "Body-of-evidence JSON file")->required();
    measure_cmd->add_option("--measure", measure_name, "bel, pl, entropy, conflict or reframe")
        ->required()
        ->check(CLI::IsMember({"bel", "pl", "entropy", "conflict", "reframe"}));
    measure_cmd->add_option("--hypothesis", hypothesis,
                            "Comma-separated labels; \"*\" the whole frame, \"-\" the empty set");
    measure_cmd->add_option("--threshold", threshold, "Conflict threshold for reframe");

    auto* pbox_cmd = app.add_subcommand("pbox", "Convert a p-box to its canonical intervals");
    pbox_cmd->add_option("file", file, "P-box JSON file")->required();
    pbox_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));

    auto* tree_cmd = app.add_subcommand("hypertree", "Test a hypergraph for acyclicity");
    tree_cmd->add_option("file", file, "Hypergraph JSON file")->required();
    tree_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));

    auto* demo_cmd = app.add_subcommand("demo", "Run a built-in scenario end to end");
    demo_cmd->add_option("name", demo_name, "zadeh, fig3 or die")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e); // prints help or the parse error
        return rc == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (combine_cmd->parsed()) return cmd_combine(files, rule, format);
        if (measure_cmd->parsed()) {
            if ((measure_name == "bel" || measure_name == "pl") &&
                !measure_cmd->count("--hypothesis")) {
                std::cerr << "error: --hypothesis is required for bel/pl\n";
                return kExitInputError;
            }
            return cmd_measure(file, measure_name, hypothesis, threshold);
        }
        if (pbox_cmd->parsed()) return cmd_pbox(file, format);
        if (tree_cmd->parsed()) return cmd_hypertree(file, format);
        if (demo_cmd->parsed()) return cmd_demo(demo_name);
    } catch (const TotalConflict& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomainError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
